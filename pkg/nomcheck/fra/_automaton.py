#  ~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~
#  MIT License
#
#  Copyright (c) 2022 The nomcheck Authors
#
#  Distributed under the terms of the MIT License,
#  see LICENSE.txt in the project root for the full license text.
#  ~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~

import logging
from dataclasses import dataclass
from enum import Enum
from typing import Callable
from typing import Dict
from typing import FrozenSet
from typing import List
from typing import Mapping
from typing import Optional
from typing import Tuple


log = logging.getLogger(__name__)


# ========================================================================= #
# Transitions                                                               #
# ========================================================================= #


class TransitionKind(Enum):
    READ = 'read'        # the name stored in register i
    LFRESH = 'lfresh'    # a name not currently stored in any register
    GFRESH = 'gfresh'    # a name never seen before

    def __str__(self):
        return self.value

    def __lt__(self, other):
        return self.value < other.value


@dataclass(frozen=True, order=True)
class Transition(object):
    source: str
    tag: str
    kind: TransitionKind
    register: int
    target: str

    def __str__(self):
        return f'{self.source} --{self.tag}:{self.kind}({self.register})--> {self.target}'


# ========================================================================= #
# Diagnostics                                                               #
# ========================================================================= #


@dataclass(frozen=True)
class FraDiagnostic(object):
    message: str
    transition: Optional[Transition] = None
    state: Optional[str] = None

    def __str__(self):
        if self.transition is not None:
            return f'{self.message}: {self.transition}'
        if self.state is not None:
            return f'{self.message}: {repr(self.state)}'
        return self.message


class FraValidationError(ValueError):

    def __init__(self, diagnostics: List[FraDiagnostic]):
        self.diagnostics = list(diagnostics)
        lines = '\n'.join(f'- {d}' for d in self.diagnostics)
        super().__init__(f'invalid fresh-register automaton, found {len(self.diagnostics)} problem(s):\n{lines}')


# ========================================================================= #
# Automaton                                                                 #
# ========================================================================= #


@dataclass(frozen=True)
class Fra(object):
    """
    A fresh-register automaton with `registers` registers. Each state has
    a set of available registers, each transition reads a name under an
    arity-1 tag and stores it in one register of the target state.
    Initial and final states are not part of the model.
    """

    registers: int
    avail: Mapping[str, FrozenSet[int]]
    tags: Mapping[str, int]
    transitions: Tuple[Transition, ...]

    def __post_init__(self):
        object.__setattr__(self, 'avail', {q: frozenset(rs) for q, rs in self.avail.items()})
        object.__setattr__(self, 'tags', dict(self.tags))
        object.__setattr__(self, 'transitions', tuple(sorted(set(self.transitions))))
        object.__setattr__(self, '_outgoing', None)

    def __hash__(self):
        return hash((self.registers, tuple(sorted(self.avail.items(), key=lambda kv: kv[0])), self.transitions))

    @property
    def states(self) -> Tuple[str, ...]:
        return tuple(sorted(self.avail))

    def outgoing(self, state: str) -> Tuple[Transition, ...]:
        if self._outgoing is None:
            outgoing: Dict[str, List[Transition]] = {q: [] for q in self.avail}
            for t in self.transitions:
                outgoing.setdefault(t.source, []).append(t)
            object.__setattr__(self, '_outgoing', {q: tuple(ts) for q, ts in outgoing.items()})
        return self._outgoing.get(state, ())

    def check(self) -> 'Fra':
        diagnostics = validate(self)
        if diagnostics:
            raise FraValidationError(diagnostics)
        return self

    def without_transitions(self, predicate: Callable[[Transition], bool]) -> 'Fra':
        kept = tuple(t for t in self.transitions if not predicate(t))
        log.debug(f'removed {len(self.transitions) - len(kept)} transition(s) from automaton')
        return Fra(registers=self.registers, avail=self.avail, tags=self.tags, transitions=kept)


# ========================================================================= #
# Validation                                                                #
# ========================================================================= #


def validate(fra: Fra) -> List[FraDiagnostic]:
    """
    Report every violation of the availability conditions:
    - reads need the register available and may only forget registers
    - fresh transitions may add only the register they write
    - register indices lie in `1..registers` and tags have arity 1
    """
    diagnostics = []
    for q, rs in sorted(fra.avail.items()):
        bad = sorted(i for i in rs if not (1 <= i <= fra.registers))
        if bad:
            diagnostics.append(FraDiagnostic(f'registers {bad} out of range 1..{fra.registers}', state=q))
    for tag, arity in sorted(fra.tags.items()):
        if arity != 1:
            diagnostics.append(FraDiagnostic(f'tag {repr(tag)} has arity {arity} but transitions carry exactly one name'))
    for t in fra.transitions:
        known = True
        for q in (t.source, t.target):
            if q not in fra.avail:
                diagnostics.append(FraDiagnostic(f'undeclared state {repr(q)}', transition=t))
                known = False
        if t.tag not in fra.tags:
            diagnostics.append(FraDiagnostic(f'undeclared tag {repr(t.tag)}', transition=t))
        if not (1 <= t.register <= fra.registers):
            diagnostics.append(FraDiagnostic(f'register {t.register} out of range 1..{fra.registers}', transition=t))
        if not known:
            continue
        src, dst = fra.avail[t.source], fra.avail[t.target]
        if t.kind == TransitionKind.READ:
            if t.register not in src:
                diagnostics.append(FraDiagnostic(f'read of register {t.register} which is not available in {repr(t.source)}', transition=t))
            if not dst <= src:
                diagnostics.append(FraDiagnostic(f'read makes registers {sorted(dst - src)} available', transition=t))
        else:
            if not dst <= (src | {t.register}):
                diagnostics.append(FraDiagnostic(f'fresh transition makes registers {sorted(dst - src - {t.register})} available', transition=t))
    return diagnostics


def register_index(fra: Fra) -> int:
    return max((len(rs) for rs in fra.avail.values()), default=0)


# ========================================================================= #
# Printing                                                                  #
# ========================================================================= #


def format_fra(fra: Fra) -> str:
    lines = [f'registers {fra.registers}']
    if fra.tags:
        lines.append('tags ' + ' '.join(f'{t}:{a}' for t, a in sorted(fra.tags.items())))
    for q in fra.states:
        lines.append(f'state {q} avail {{{",".join(map(str, sorted(fra.avail[q])))}}}')
    for t in fra.transitions:
        lines.append(f'trans {t.source} {t.tag} {t.kind}({t.register}) {t.target}')
    return '\n'.join(lines) + '\n'


# ========================================================================= #
# END                                                                       #
# ========================================================================= #
