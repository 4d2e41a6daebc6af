#  ~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~
#  MIT License
#
#  Copyright (c) 2022 The nomcheck Authors
#
#  Distributed under the terms of the MIT License,
#  see LICENSE.txt in the project root for the full license text.
#  ~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~

import contextlib
import itertools
import os
import sys
from typing import Any
from typing import Dict
from typing import FrozenSet
from typing import Optional

from nomcheck.fra import Fra
from nomcheck.frontend import parse_fra
from nomcheck.frontend import parse_formula
from nomcheck.logic import Formula
from nomcheck.nominal import Name
from nomcheck.nominal import PartialInjection
from nomcheck.nominal import Permutation
from nomcheck.nominal import apply
from nomcheck.nominal import support
from nomcheck.pipeline import prepare_formula


# ========================================================================= #
# TEST UTILS                                                                #
# ========================================================================= #


@contextlib.contextmanager
def temp_sys_args(new_argv):
    # hydra reads its overrides from `sys.argv`
    saved, sys.argv = sys.argv, list(new_argv)
    try:
        yield
    finally:
        sys.argv = saved


@contextlib.contextmanager
def temp_environ(environment: Dict[str, Any]):
    saved = {k: os.environ.get(k) for k in environment}
    os.environ.update({k: str(v) for k, v in environment.items()})
    try:
        yield
    finally:
        for k, v in saved.items():
            if v is None:
                os.environ.pop(k, None)
            else:
                os.environ[k] = v


# ========================================================================= #
# BRUTE FORCE                                                               #
# ========================================================================= #


def find_permutation(x: Any, y: Any, fixed: FrozenSet[Name] = frozenset()) -> Optional[Permutation]:
    """
    Search every bijection between the names of `x` and `y` outside of
    `fixed` for a permutation mapping `x` to `y` and fixing `fixed`.
    """
    xs, ys = sorted(support(x) - fixed), sorted(support(y) - fixed)
    if len(xs) != len(ys):
        return None
    for image in itertools.permutations(ys):
        p = PartialInjection(dict(zip(xs, image))).to_permutation()
        if apply(p, x) == y:
            return p
    return None


# ========================================================================= #
# FORMULAS & MODELS                                                         #
# ========================================================================= #


PSI_PATH = 'nu X. fresh x. <o:x> X'
# no name is ever read twice along a path, with negations eliminated
PSI_NOT_ALL = 'nu X. all x. [o:x] (X & nu Y. all y. [o:y] (Y & x != y))'
PSI_SUT = 'nu X. fresh s. <S:s> (mu Y. (<U:s> Y | <T:s> X))'


def formula(text: str, fra: Fra = None) -> Formula:
    return prepare_formula(parse_formula(text, None if (fra is None) else fra.tags), fra)


def fra_from_lines(*lines: str) -> Fra:
    return parse_fra('\n'.join(lines))


# ========================================================================= #
# END                                                                       #
# ========================================================================= #
