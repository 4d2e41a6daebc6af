#  ~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~
#  MIT License
#
#  Copyright (c) 2022 The nomcheck Authors
#
#  Distributed under the terms of the MIT License,
#  see LICENSE.txt in the project root for the full license text.
#  ~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~

from dataclasses import dataclass
from typing import Dict
from typing import FrozenSet
from typing import Iterable
from typing import Iterator
from typing import Mapping
from typing import Optional
from typing import Sequence
from typing import Tuple


# ========================================================================= #
# Names                                                                     #
# ========================================================================= #


@dataclass(frozen=True, order=True)
class Name(object):
    """
    An atom, printed as `#id`. Equality is the only meaningful
    observation, the order on ids is only used for determinism.
    """

    id: int

    def __post_init__(self):
        if isinstance(self.id, bool) or not isinstance(self.id, int):
            raise TypeError(f'name ids must be integers, got: {repr(self.id)}')
        if self.id < 0:
            raise ValueError(f'name ids must be non-negative, got: {repr(self.id)}')

    def __str__(self):
        return f'#{self.id}'

    __repr__ = __str__


def names(*ids: int) -> Tuple[Name, ...]:
    return tuple(Name(i) for i in ids)


def smallest_name_not_in(*excluded: Iterable[Name]) -> Name:
    used = set()
    for names_ in excluded:
        used.update(a.id for a in names_)
    i = 0
    while i in used:
        i += 1
    return Name(i)


# ========================================================================= #
# Permutations                                                              #
# ========================================================================= #


class Permutation(object):
    """
    A finite bijection on names stored as an explicit map.
    Fixed points are removed and the inverse is cached.
    """

    __slots__ = ('_map', '_inv', '_hash')

    def __init__(self, mapping: Optional[Mapping[Name, Name]] = None):
        mapping = {} if (mapping is None) else mapping
        fwd: Dict[Name, Name] = {}
        for a, b in mapping.items():
            if not isinstance(a, Name) or not isinstance(b, Name):
                raise TypeError(f'permutations can only map names to names, got: {repr(a)} -> {repr(b)}')
            if a != b:
                fwd[a] = b
        inv = {b: a for a, b in fwd.items()}
        if len(inv) != len(fwd):
            raise ValueError(f'mapping is not injective: {repr(mapping)}')
        if inv.keys() != fwd.keys():
            raise ValueError(f'mapping does not permute its own domain: {repr(mapping)}')
        self._map = fwd
        self._inv = inv
        self._hash = None

    def __call__(self, a: Name) -> Name:
        return self._map.get(a, a)

    def inverse(self) -> 'Permutation':
        p = Permutation.__new__(Permutation)
        p._map, p._inv, p._hash = self._inv, self._map, None
        return p

    @property
    def domain(self) -> FrozenSet[Name]:
        return frozenset(self._map)

    @property
    def mapping(self) -> Dict[Name, Name]:
        return dict(self._map)

    @property
    def is_identity(self) -> bool:
        return not self._map

    def __eq__(self, other):
        if not isinstance(other, Permutation):
            return NotImplemented
        return self._map == other._map

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(frozenset(self._map.items()))
        return self._hash

    def __repr__(self):
        items = ', '.join(f'{a}: {b}' for a, b in sorted(self._map.items()))
        return f'{self.__class__.__name__}({{{items}}})'


IDENTITY = Permutation()


def swap(a: Name, b: Name) -> Permutation:
    if a == b:
        return IDENTITY
    return Permutation({a: b, b: a})


def compose(p1: Permutation, p2: Permutation) -> Permutation:
    """
    The permutation `a -> p1(p2(a))`.
    """
    if p2.is_identity:
        return p1
    if p1.is_identity:
        return p2
    return Permutation({a: p1(p2(a)) for a in (p1.domain | p2.domain)})


# ========================================================================= #
# Partial Injections                                                        #
# ========================================================================= #


class PartialInjection(object):
    """
    A finite injective partial map on names, grown by `extend_match`
    while two structures are compared side by side.
    """

    __slots__ = ('_map', '_targets')

    def __init__(self, pairs: Optional[Mapping[Name, Name]] = None):
        pairs = {} if (pairs is None) else dict(pairs)
        targets = frozenset(pairs.values())
        if len(targets) != len(pairs):
            raise ValueError(f'pairs are not injective: {repr(pairs)}')
        self._map = pairs
        self._targets = targets

    def __getitem__(self, a: Name) -> Name:
        return self._map[a]

    def __len__(self):
        return len(self._map)

    def __eq__(self, other):
        if not isinstance(other, PartialInjection):
            return NotImplemented
        return self._map == other._map

    def __hash__(self):
        return hash(frozenset(self._map.items()))

    def __repr__(self):
        items = ', '.join(f'{a}: {b}' for a, b in sorted(self._map.items()))
        return f'{self.__class__.__name__}({{{items}}})'

    def items(self) -> Iterator[Tuple[Name, Name]]:
        yield from self._map.items()

    @property
    def sources(self) -> FrozenSet[Name]:
        return frozenset(self._map)

    @property
    def targets(self) -> FrozenSet[Name]:
        return self._targets

    def to_permutation(self) -> Permutation:
        """
        Complete to a permutation agreeing with this injection, each
        chain `d -> f(d) -> ... -> r` with `r` outside the domain is
        closed into a cycle by mapping `r` back to its start `d`.
        """
        perm = dict(self._map)
        for start in sorted(self.sources - self._targets):
            end = self._map[start]
            while end in self._map:
                end = self._map[end]
            perm[end] = start
        return Permutation(perm)


def extend_match(inj: PartialInjection, c: Sequence[Name], d: Sequence[Name]) -> Optional[PartialInjection]:
    """
    The smallest extension of `inj` mapping `c` pointwise onto `d`,
    or `None` if the lengths differ or a pair conflicts.
    """
    if len(c) != len(d):
        return None
    pairs = dict(inj.items())
    targets = set(inj.targets)
    for a, b in zip(c, d):
        if a in pairs:
            if pairs[a] != b:
                return None
        elif b in targets:
            return None
        else:
            pairs[a] = b
            targets.add(b)
    return PartialInjection(pairs)


# ========================================================================= #
# END                                                                       #
# ========================================================================= #
