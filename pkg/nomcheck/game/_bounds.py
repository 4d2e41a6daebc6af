#  ~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~
#  MIT License
#
#  Copyright (c) 2022 The nomcheck Authors
#
#  Distributed under the terms of the MIT License,
#  see LICENSE.txt in the project root for the full license text.
#  ~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~

from math import factorial
from typing import Any
from typing import FrozenSet

from nomcheck.fra import AutomatonState
from nomcheck.fra import Fra
from nomcheck.fra import register_index
from nomcheck.logic import Formula
from nomcheck.logic import bounding_depth
from nomcheck.logic import free_rec_vars
from nomcheck.logic import free_value_vars
from nomcheck.logic import is_negation_free
from nomcheck.logic import size
from nomcheck.nominal import Name
from nomcheck.nominal import support


# ========================================================================= #
# Grade                                                                     #
# ========================================================================= #


def _check_root(phi0: Formula):
    if free_rec_vars(phi0):
        raise ValueError(f'formula is not closed, free recursion variables: {sorted(free_rec_vars(phi0))}')
    if free_value_vars(phi0):
        raise ValueError(f'formula is not firm, free value variables: {sorted(free_value_vars(phi0))}')
    if not is_negation_free(phi0):
        raise ValueError(f'formula contains negations, eliminate them first: {phi0}')


def nominal_potential(phi0: Formula) -> int:
    return len(support(phi0)) + bounding_depth(phi0)


def grade(phi0: Formula, fra: Fra) -> int:
    """
    The history budget `N = |supp(phi0)| + ||phi0|| + regindex(fra)`.
    """
    _check_root(phi0)
    return nominal_potential(phi0) + register_index(fra)


def orbit_size_bound(fra: Fra, phi0: Formula, eps_factor: int = 2) -> int:
    """
    Upper bound on the number of positions of the orbit game:
    `|Q| * |phi0| * (M! / |supp phi0|!) * (N+1)^(M+1) * (1+eps)`
    where `M` is the nominal potential and `N` the grade.
    """
    n, m = grade(phi0, fra), nominal_potential(phi0)
    s = len(support(phi0))
    return len(fra.avail) * size(phi0) * (factorial(m) // factorial(s)) * (n + 1) ** (m + 1) * eps_factor


# ========================================================================= #
# Well Bounding                                                             #
# ========================================================================= #


def well_bound(history: FrozenSet[Name], state: AutomatonState, relevant: Any, n: int) -> FrozenSet[Name]:
    """
    Trim `history` to at most `n+1` names, keeping every name of the
    registers and of `relevant` (a formula or a set of names) and
    completing with the smallest others.
    """
    history = frozenset(history)
    if len(history) <= n:
        return history
    _, regs = state
    keep = history & (regs.range | support(relevant))
    if len(keep) > n + 1:
        raise RuntimeError(f'history cannot be trimmed to {n + 1} names, {len(keep)} are in use: {sorted(keep)}')
    rest = sorted(history - keep)[:n + 1 - len(keep)]
    return keep | frozenset(rest)


# ========================================================================= #
# END                                                                       #
# ========================================================================= #
