#  ~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~
#  MIT License
#
#  Copyright (c) 2022 The nomcheck Authors
#
#  Distributed under the terms of the MIT License,
#  see LICENSE.txt in the project root for the full license text.
#  ~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~

from typing import Optional
from typing import Tuple

from nomcheck.fra import Config
from nomcheck.fra import Fra
from nomcheck.fra import RegisterAssignment
from nomcheck.fra import Transition
from nomcheck.fra import TransitionKind
from nomcheck.logic import Formula
from nomcheck.nominal import Name
from nomcheck.sampling._formulas import random_formula
from nomcheck.util.seeds import RngLike
from nomcheck.util.seeds import make_rng


_KINDS = (TransitionKind.READ, TransitionKind.LFRESH, TransitionKind.GFRESH)


# ========================================================================= #
# Automata                                                                  #
# ========================================================================= #


def _allowed(t: Transition, avail) -> bool:
    src, dst = avail[t.source], avail[t.target]
    if t.kind == TransitionKind.READ:
        return (t.register in src) and (dst <= src)
    return dst <= (src | {t.register})


def random_fra(
    rng: RngLike = None,
    max_states: int = 3,
    max_registers: int = 2,
    max_tags: int = 3,
    max_transitions: int = 6,
) -> Fra:
    """
    A random valid automaton. Transitions are drawn uniformly and those
    that break the availability conditions are dropped.
    """
    rng = make_rng(rng)
    num_states = int(rng.integers(1, max_states + 1))
    registers = int(rng.integers(1, max_registers + 1))
    num_tags = int(rng.integers(1, max_tags + 1))
    states = [f'q{i}' for i in range(num_states)]
    tags = {f't{i}': 1 for i in range(num_tags)}
    avail = {q: frozenset(int(r) for r in range(1, registers + 1) if rng.random() < 0.5) for q in states}
    transitions = []
    for _ in range(int(rng.integers(1, max_transitions + 1)) * 3):
        t = Transition(
            source=states[int(rng.integers(num_states))],
            tag=f't{int(rng.integers(num_tags))}',
            kind=_KINDS[int(rng.integers(len(_KINDS)))],
            register=int(rng.integers(1, registers + 1)),
            target=states[int(rng.integers(num_states))],
        )
        if _allowed(t, avail):
            transitions.append(t)
        if len(transitions) >= max_transitions:
            break
    return Fra(registers=registers, avail=avail, tags=tags, transitions=tuple(transitions)).check()


def random_config(fra: Fra, rng: RngLike = None, max_extra: int = 1, num_names: int = 3) -> Config:
    """
    A random configuration over the first names, the history
    holds the register contents and up to `max_extra` other names.
    """
    rng = make_rng(rng)
    state = fra.states[int(rng.integers(len(fra.states)))]
    avail = sorted(fra.avail[state])
    pool = [Name(i) for i in range(max(num_names, len(avail)))]
    values = rng.permutation(len(pool))[:len(avail)]
    regs = RegisterAssignment({i: pool[int(v)] for i, v in zip(avail, values)})
    others = [a for a in pool if a not in regs.range]
    extra = int(rng.integers(0, min(max_extra, len(others)) + 1))
    picked = rng.permutation(len(others))[:extra]
    return Config(state, regs, regs.range | frozenset(others[int(i)] for i in picked))


def random_setup(
    rng: RngLike = None,
    max_states: int = 3,
    max_registers: int = 2,
    max_tags: int = 3,
    size: int = 10,
    binders: int = 2,
    fixpoints: int = 2,
    names: int = 1,
    max_size: Optional[int] = None,
) -> Tuple[Fra, Formula, Config]:
    """
    A random automaton with a closed, firm and negation free formula
    over its tags and a start configuration, `max_size` caps the formula size.
    """
    rng = make_rng(rng)
    fra = random_fra(rng, max_states=max_states, max_registers=max_registers, max_tags=max_tags)
    phi = random_formula(rng, tags=tuple(fra.tags), size=size, binders=binders, fixpoints=fixpoints, names=names, max_size=max_size)
    config = random_config(fra, rng)
    return fra, phi, config


# ========================================================================= #
# END                                                                       #
# ========================================================================= #
