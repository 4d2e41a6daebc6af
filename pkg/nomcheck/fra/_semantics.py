#  ~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~
#  MIT License
#
#  Copyright (c) 2022 The nomcheck Authors
#
#  Distributed under the terms of the MIT License,
#  see LICENSE.txt in the project root for the full license text.
#  ~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~

from typing import FrozenSet
from typing import List
from typing import Optional
from typing import Sequence
from typing import Set
from typing import Tuple

from nomcheck.fra._automaton import Fra
from nomcheck.fra._automaton import Transition
from nomcheck.fra._automaton import TransitionKind
from nomcheck.fra._config import Config
from nomcheck.fra._config import RegisterAssignment
from nomcheck.nominal import Name
from nomcheck.nominal import PartialInjection
from nomcheck.nominal import Permutation
from nomcheck.nominal import extend_match
from nomcheck.nominal import smallest_name_not_in


AutomatonState = Tuple[str, RegisterAssignment]
Move = Tuple[Tuple[str, Name], Config]


# ========================================================================= #
# Transition Relation                                                       #
# ========================================================================= #


def _fires(t: Transition, cfg: Config, a: Name) -> bool:
    if t.kind == TransitionKind.READ:
        return cfg.regs.get(t.register) == a
    if t.kind == TransitionKind.LFRESH:
        return a not in cfg.regs.range
    if t.kind == TransitionKind.GFRESH:
        return a not in cfg.history
    raise KeyError(f'invalid transition kind: {repr(t.kind)}')


def _fire(fra: Fra, t: Transition, cfg: Config, a: Name) -> Config:
    regs = cfg.regs.restrict(cfg.regs.domain - {t.register}).assign(t.register, a)
    return Config(t.target, regs.restrict(fra.avail[t.target]), cfg.history | {a})


def step(fra: Fra, cfg: Config, tag: str, a: Name) -> FrozenSet[Config]:
    """
    All configurations reachable from `cfg` by reading `a` under `tag`.
    """
    return frozenset(
        _fire(fra, t, cfg, a)
        for t in fra.outgoing(cfg.state)
        if t.tag == tag and _fires(t, cfg, a)
    )


def representative_names(cfg: Config, protected: FrozenSet[Name]) -> List[Name]:
    """
    Names that represent every possible choice up to permutations fixing
    `protected` and the registers: the protected and register names, the
    smallest other name of the history and the smallest unseen name.
    """
    pinned = frozenset(protected) | cfg.regs.range
    reps = sorted(pinned)
    seen = sorted(cfg.history - pinned)
    if seen:
        reps.append(seen[0])
    reps.append(smallest_name_not_in(cfg.history, pinned))
    return reps


def representative_successors(fra: Fra, cfg: Config, protected: FrozenSet[Name]) -> List[Move]:
    """
    One-step successors of `cfg` restricted to representative names, listed
    in a deterministic order as `((tag, name), successor)` pairs.
    """
    moves = []
    seen: Set[Move] = set()
    for a in representative_names(cfg, protected):
        for t in fra.outgoing(cfg.state):
            if _fires(t, cfg, a):
                move = ((t.tag, a), _fire(fra, t, cfg, a))
                if move not in seen:
                    seen.add(move)
                    moves.append(move)
    return moves


# ========================================================================= #
# Permutation Oracle                                                        #
# ========================================================================= #


def match_states(s1: AutomatonState, s2: AutomatonState, a: Sequence[Name], b: Sequence[Name], inj: Optional[PartialInjection] = None) -> Optional[PartialInjection]:
    """
    Extend `inj` so that it maps `a` to `b` and the registers of `s1`
    index-wise onto those of `s2`, or return `None`.
    """
    (q1, regs1), (q2, regs2) = s1, s2
    if q1 != q2 or regs1.domain != regs2.domain:
        return None
    inj = extend_match(PartialInjection() if (inj is None) else inj, tuple(a), tuple(b))
    if inj is None:
        return None
    return extend_match(inj, [x for _, x in regs1.pairs], [y for _, y in regs2.pairs])


def permutation_oracle(s1: AutomatonState, s2: AutomatonState, a: Sequence[Name], b: Sequence[Name]) -> Optional[Permutation]:
    """
    A permutation `p` with `p(s1) = s2` and `p(a) = b`, or `None`.
    """
    inj = match_states(s1, s2, a, b)
    if inj is None:
        return None
    return inj.to_permutation()


# ========================================================================= #
# END                                                                       #
# ========================================================================= #
