#  ~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~
#  MIT License
#
#  Copyright (c) 2022 The nomcheck Authors
#
#  Distributed under the terms of the MIT License,
#  see LICENSE.txt in the project root for the full license text.
#  ~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~

import itertools
import logging
from typing import FrozenSet
from typing import Iterable
from typing import List
from typing import Optional

from nomcheck.fra import Config
from nomcheck.fra import Fra
from nomcheck.fra import RegisterAssignment
from nomcheck.game import grade
from nomcheck.game import nominal_potential
from nomcheck.logic import Formula
from nomcheck.nominal import Name
from nomcheck.nominal import smallest_name_not_in
from nomcheck.nominal import support


log = logging.getLogger(__name__)


NamePool = FrozenSet[Name]
ConfigSet = FrozenSet[Config]


# ========================================================================= #
# Errors                                                                    #
# ========================================================================= #


class PoolError(ValueError):
    """
    A name is used that is not part of the finite name pool.
    """


def check_in_pool(pool: NamePool, names: Iterable[Name], what: str = 'names'):
    missing = sorted(frozenset(names) - pool)
    if missing:
        raise PoolError(f'{what} outside of the name pool: {missing}, pool: {sorted(pool)}')


# ========================================================================= #
# Pools                                                                     #
# ========================================================================= #


def extend_pool(names: Iterable[Name], size: int) -> NamePool:
    """
    Add the smallest unused names until the pool holds `size` names.
    """
    pool = set(names)
    while len(pool) < size:
        pool.add(smallest_name_not_in(pool))
    return frozenset(pool)


def default_pool(fra: Fra, phi0: Formula, config: Config) -> NamePool:
    """
    The names of the formula and the start history, plus `grade + 2`
    fresh names. Topped up to `grade + potential + 2` names so that a name
    fresh for any reachable formula and bounded history always remains.
    """
    n, m = grade(phi0, fra), nominal_potential(phi0)
    base = support(phi0) | config.history
    return extend_pool(base, max(len(base) + n + 2, n + m + 2))


# ========================================================================= #
# Enumeration                                                               #
# ========================================================================= #


def _histories(pool: List[Name], used: FrozenSet[Name], max_history: Optional[int]):
    others = [a for a in pool if a not in used]
    limit = len(others) if (max_history is None) else max_history - len(used)
    for k in range(0, min(limit, len(others)) + 1):
        for extra in itertools.combinations(others, k):
            yield used | frozenset(extra)


def enumerate_configs(fra: Fra, pool: NamePool, max_history: Optional[int] = None) -> ConfigSet:
    """
    Every configuration `(q, regs, H)` with the registers of `q` filled
    injectively and `range(regs) <= H <= pool`. With `max_history` only
    histories of at most that many names are produced.
    """
    pool = sorted(frozenset(pool))
    configs = []
    for q in fra.states:
        avail = sorted(fra.avail[q])
        count = len(configs)
        for values in itertools.permutations(pool, len(avail)):
            regs = RegisterAssignment(zip(avail, values))
            for history in _histories(pool, regs.range, max_history):
                configs.append(Config(q, regs, history))
        if count == len(configs):
            log.warning(f'state {repr(q)} has no configurations: {len(avail)} register(s) available but the pool holds {len(pool)} name(s) with histories of at most {max_history} name(s)')
    return frozenset(configs)


# ========================================================================= #
# END                                                                       #
# ========================================================================= #
