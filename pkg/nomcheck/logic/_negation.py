#  ~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~
#  MIT License
#
#  Copyright (c) 2022 The nomcheck Authors
#
#  Distributed under the terms of the MIT License,
#  see LICENSE.txt in the project root for the full license text.
#  ~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~

from typing import FrozenSet

from nomcheck.logic._measures import free_value_vars
from nomcheck.logic._syntax import DUALS
from nomcheck.logic._syntax import Compare
from nomcheck.logic._syntax import Fixpoint
from nomcheck.logic._syntax import Formula
from nomcheck.logic._syntax import FormulaError
from nomcheck.logic._syntax import Fresh
from nomcheck.logic._syntax import Junction
from nomcheck.logic._syntax import Modal
from nomcheck.logic._syntax import Not
from nomcheck.logic._syntax import Quantifier
from nomcheck.logic._syntax import Var


# ========================================================================= #
# Negation Elimination                                                      #
# ========================================================================= #


def negation_free(phi: Formula) -> Formula:
    """
    Push every negation down to the atoms by dualising connectives.
    Negated fixpoints become their duals with the recursion variable
    negated inside, `fresh` is self-dual. The result contains no `Not`
    and is no larger than the input minus the number of negations.
    """
    fv = free_value_vars(phi)
    if fv:
        raise ValueError(f'negation elimination requires a firm formula, free value variables: {sorted(fv)}')
    return _push(phi, False, frozenset())


def _push(phi: Formula, neg: bool, flipped: FrozenSet[str]) -> Formula:
    if isinstance(phi, Not):
        return _push(phi.body, not neg, flipped)
    cls = DUALS[type(phi)] if (neg and not isinstance(phi, Var)) else type(phi)
    if isinstance(phi, Compare):
        return cls(phi.left, phi.right)
    if isinstance(phi, Junction):
        return cls(_push(phi.left, neg, flipped), _push(phi.right, neg, flipped))
    if isinstance(phi, Quantifier):
        assert (cls is Fresh) == isinstance(phi, Fresh)
        return cls(phi.var, _push(phi.body, neg, flipped))
    if isinstance(phi, Modal):
        return cls(phi.label, _push(phi.body, neg, flipped))
    if isinstance(phi, Fixpoint):
        # occurrences of a dualised variable carry one extra negation
        body_flipped = (flipped | {phi.rec}) if neg else (flipped - {phi.rec})
        return cls(phi.rec, phi.params, _push(phi.body, neg, body_flipped), phi.args)
    if isinstance(phi, Var):
        if neg != (phi.rec in flipped):
            raise FormulaError(f'recursion variable {repr(phi.rec)} occurs under an odd number of negations')
        return phi
    raise TypeError(f'not a formula: {repr(phi)}')


# ========================================================================= #
# END                                                                       #
# ========================================================================= #
