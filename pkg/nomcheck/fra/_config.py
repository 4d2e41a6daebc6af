#  ~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~
#  MIT License
#
#  Copyright (c) 2022 The nomcheck Authors
#
#  Distributed under the terms of the MIT License,
#  see LICENSE.txt in the project root for the full license text.
#  ~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~

from dataclasses import dataclass
from typing import FrozenSet
from typing import Iterable
from typing import Iterator
from typing import Mapping
from typing import Optional
from typing import Tuple
from typing import Union

from nomcheck.nominal import Name
from nomcheck.nominal import Nominal
from nomcheck.nominal import Permutation


# ========================================================================= #
# Register Assignments                                                      #
# ========================================================================= #


class RegisterAssignment(Nominal):
    """
    An injective partial map from register indices to names,
    stored as `(index, name)` pairs sorted by index.
    """

    __slots__ = ('_pairs',)

    def __init__(self, pairs: Union[Mapping[int, Name], Iterable[Tuple[int, Name]]] = ()):
        items = pairs.items() if isinstance(pairs, Mapping) else pairs
        pairs = tuple(sorted((int(i), a) for i, a in items))
        indices = [i for i, _ in pairs]
        if len(set(indices)) != len(indices):
            raise ValueError(f'register assigned twice: {pairs}')
        values = [a for _, a in pairs]
        if not all(isinstance(a, Name) for a in values):
            raise TypeError(f'registers can only store names, got: {pairs}')
        if len(set(values)) != len(values):
            raise ValueError(f'register assignment is not injective: {pairs}')
        self._pairs = pairs

    @property
    def pairs(self) -> Tuple[Tuple[int, Name], ...]:
        return self._pairs

    @property
    def domain(self) -> FrozenSet[int]:
        return frozenset(i for i, _ in self._pairs)

    @property
    def range(self) -> FrozenSet[Name]:
        return frozenset(a for _, a in self._pairs)

    def get(self, i: int) -> Optional[Name]:
        for j, a in self._pairs:
            if i == j:
                return a
        return None

    def assign(self, i: int, a: Name) -> 'RegisterAssignment':
        return RegisterAssignment({**dict(self._pairs), i: a})

    def restrict(self, indices: Iterable[int]) -> 'RegisterAssignment':
        indices = frozenset(indices)
        return RegisterAssignment((i, a) for i, a in self._pairs if i in indices)

    def __len__(self):
        return len(self._pairs)

    def __eq__(self, other):
        if not isinstance(other, RegisterAssignment):
            return NotImplemented
        return self._pairs == other._pairs

    def __hash__(self):
        return hash(self._pairs)

    def __repr__(self):
        return '[' + ', '.join(f'{i}->{a}' for i, a in self._pairs) + ']'

    def _permute(self, p: Permutation) -> 'RegisterAssignment':
        return RegisterAssignment((i, p(a)) for i, a in self._pairs)

    def _iter_names(self) -> Iterator[Name]:
        for _, a in self._pairs:
            yield a


EMPTY_REGISTERS = RegisterAssignment()


# ========================================================================= #
# Configurations                                                            #
# ========================================================================= #


@dataclass(frozen=True)
class Config(Nominal):
    """
    A configuration `((state, regs), history)` of the transition system
    generated by an automaton, the history holds every name seen so far.
    """

    state: str
    regs: RegisterAssignment
    history: FrozenSet[Name]

    def __post_init__(self):
        object.__setattr__(self, 'history', frozenset(self.history))
        if not (self.regs.range <= self.history):
            raise ValueError(f'registers {self.regs} hold names outside of the history {sorted(self.history)}')

    @property
    def automaton_state(self) -> Tuple[str, RegisterAssignment]:
        return self.state, self.regs

    def _permute(self, p: Permutation) -> 'Config':
        return Config(self.state, self.regs._permute(p), frozenset(p(a) for a in self.history))

    def _iter_names(self) -> Iterator[Name]:
        yield from self.regs._iter_names()
        yield from sorted(self.history)

    def __str__(self):
        return f'({self.state}, {self.regs}, {{{", ".join(map(str, sorted(self.history)))}}})'


def make_config(state: str, regs: Optional[Mapping[int, Name]] = None, history: Optional[Iterable[Name]] = None) -> Config:
    """
    Build a configuration, the history defaults to the register contents.
    """
    regs = RegisterAssignment(regs or {})
    history = regs.range if (history is None) else frozenset(history)
    return Config(state, regs, history)


# ========================================================================= #
# END                                                                       #
# ========================================================================= #
