#  ~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~
#  MIT License
#
#  Copyright (c) 2022 The nomcheck Authors
#
#  Distributed under the terms of the MIT License,
#  see LICENSE.txt in the project root for the full license text.
#  ~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~

from abc import ABC
from enum import Enum
from typing import Any
from typing import FrozenSet
from typing import Iterator
from typing import Tuple
from typing import TypeVar

from nomcheck.nominal._names import Name
from nomcheck.nominal._names import PartialInjection
from nomcheck.nominal._names import Permutation
from nomcheck.nominal._names import smallest_name_not_in


T = TypeVar('T')


# ========================================================================= #
# Nominal Protocol                                                          #
# ========================================================================= #


class Nominal(ABC):
    """
    Base class for structures that names act on.
    - `_permute` returns a copy with every name `a` replaced by `p(a)`
    - `_iter_names` yields every name occurrence in a fixed left-to-right
      order, this order defines canonical representatives of orbits.
    """

    __slots__ = ()

    def _permute(self: T, p: Permutation) -> T:
        raise NotImplementedError

    def _iter_names(self) -> Iterator[Name]:
        raise NotImplementedError


_ATOMS = (str, int, float, bool, type(None), Enum)


def _order_key(x: Any):
    if isinstance(x, Name):
        return 0, x.id, ''
    return 1, 0, repr(x)


# ========================================================================= #
# Action & Support                                                          #
# ========================================================================= #


def apply(p: Permutation, x: T) -> T:
    """
    Act with `p` on `x`, structurally over names, tuples, lists,
    sets, dictionaries and nominal objects.
    """
    if p.is_identity:
        return x
    return _apply(p, x)


def _apply(p: Permutation, x):
    if isinstance(x, Name):
        return p(x)
    if isinstance(x, Nominal):
        return x._permute(p)
    if isinstance(x, _ATOMS):
        return x
    if isinstance(x, tuple):
        return tuple(_apply(p, v) for v in x)
    if isinstance(x, list):
        return [_apply(p, v) for v in x]
    if isinstance(x, frozenset):
        return frozenset(_apply(p, v) for v in x)
    if isinstance(x, set):
        return {_apply(p, v) for v in x}
    if isinstance(x, dict):
        return {_apply(p, k): _apply(p, v) for k, v in x.items()}
    raise TypeError(f'permutations cannot act on values of type: {type(x).__name__}')


def iter_names(x: Any) -> Iterator[Name]:
    """
    Yield the names occurring in `x` (with repetition) in a deterministic
    left-to-right order, sets and dictionaries are visited in ascending order.
    """
    if isinstance(x, Name):
        yield x
    elif isinstance(x, Nominal):
        yield from x._iter_names()
    elif isinstance(x, _ATOMS):
        return
    elif isinstance(x, (tuple, list)):
        for v in x:
            yield from iter_names(v)
    elif isinstance(x, (set, frozenset)):
        for v in sorted(x, key=_order_key):
            yield from iter_names(v)
    elif isinstance(x, dict):
        for k in sorted(x, key=_order_key):
            yield from iter_names(k)
            yield from iter_names(x[k])
    else:
        raise TypeError(f'cannot find the names of values of type: {type(x).__name__}')


def support(x: Any) -> FrozenSet[Name]:
    return frozenset(iter_names(x))


# ========================================================================= #
# Canonical Representatives                                                 #
# ========================================================================= #


def canonical_renaming(x: T, protected: FrozenSet[Name] = frozenset()) -> Tuple[T, Permutation]:
    """
    Rename the unprotected names of `x` to the smallest names outside of
    `protected`, in order of first occurrence. Returns `(x', p)` with
    `apply(p, x) == x'` and `p` fixing every protected name.
    Two values get the same result iff they are in the same orbit, as long
    as their sets are visited after all other names, as in configurations
    and positions.
    """
    protected = frozenset(protected)
    mapping = {}
    nxt = 0
    for a in iter_names(x):
        if (a in protected) or (a in mapping):
            continue
        while Name(nxt) in protected:
            nxt += 1
        mapping[a] = Name(nxt)
        nxt += 1
    p = PartialInjection(mapping).to_permutation()
    return apply(p, x), p


def orbit_key(x: T) -> T:
    return canonical_renaming(x)[0]


def fresh_name(*excluded) -> Name:
    """
    The smallest name not occurring in any of the given structures.
    """
    return smallest_name_not_in(*(iter_names(x) for x in excluded))


# ========================================================================= #
# END                                                                       #
# ========================================================================= #
