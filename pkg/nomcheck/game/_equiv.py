#  ~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~
#  MIT License
#
#  Copyright (c) 2022 The nomcheck Authors
#
#  Distributed under the terms of the MIT License,
#  see LICENSE.txt in the project root for the full license text.
#  ~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~

from typing import Optional
from typing import Sequence

from nomcheck.fra import match_states
from nomcheck.game._position import Position
from nomcheck.logic import Compare
from nomcheck.logic import Fixpoint
from nomcheck.logic import Formula
from nomcheck.logic import Junction
from nomcheck.logic import Modal
from nomcheck.logic import Not
from nomcheck.logic import Quantifier
from nomcheck.logic import Value
from nomcheck.logic import Var
from nomcheck.nominal import Name
from nomcheck.nominal import PartialInjection
from nomcheck.nominal import Permutation
from nomcheck.nominal import extend_match


# ========================================================================= #
# Formula Matching                                                          #
# ========================================================================= #


def _match_values(us: Sequence[Value], vs: Sequence[Value], inj: PartialInjection) -> Optional[PartialInjection]:
    if len(us) != len(vs):
        return None
    c, d = [], []
    for u, v in zip(us, vs):
        if isinstance(u, Name) and isinstance(v, Name):
            c.append(u)
            d.append(v)
        elif u != v:
            return None
    return extend_match(inj, c, d)


def match_formulas(f1: Formula, f2: Formula, inj: Optional[PartialInjection] = None) -> Optional[PartialInjection]:
    """
    Descend both formulas in lockstep, extending `inj` so that it maps
    the names of `f1` onto the names of `f2` at the same places.
    Returns `None` if the shapes differ or no injection exists.
    """
    inj = PartialInjection() if (inj is None) else inj
    if type(f1) is not type(f2):
        return None
    if isinstance(f1, Compare):
        return _match_values((f1.left, f1.right), (f2.left, f2.right), inj)
    if isinstance(f1, Junction):
        inj = match_formulas(f1.left, f2.left, inj)
        return None if (inj is None) else match_formulas(f1.right, f2.right, inj)
    if isinstance(f1, Not):
        return match_formulas(f1.body, f2.body, inj)
    if isinstance(f1, Quantifier):
        return match_formulas(f1.body, f2.body, inj) if (f1.var == f2.var) else None
    if isinstance(f1, Modal):
        if f1.label.tag != f2.label.tag:
            return None
        inj = _match_values(f1.label.args, f2.label.args, inj)
        return None if (inj is None) else match_formulas(f1.body, f2.body, inj)
    if isinstance(f1, Fixpoint):
        if (f1.rec, f1.params) != (f2.rec, f2.params):
            return None
        inj = match_formulas(f1.body, f2.body, inj)
        return None if (inj is None) else _match_values(f1.args, f2.args, inj)
    if isinstance(f1, Var):
        return _match_values(f1.args, f2.args, inj) if (f1.rec == f2.rec) else None
    raise TypeError(f'not a formula: {repr(f1)}')


# ========================================================================= #
# Nominal Equivalence                                                       #
# ========================================================================= #


def nominal_equiv_positions(p1: Position, p2: Position) -> Optional[Permutation]:
    """
    A permutation mapping position `p1` onto `p2`, or `None`. Positions
    are equivalent when owners, ranks and history sizes agree, the formulas
    and automaton states match under one injection that respects history
    membership, and both histories hold equally many unmatched names.
    """
    if (p1.owner, p1.rank) != (p2.owner, p2.rank):
        return None
    if len(p1.history) != len(p2.history):
        return None
    inj = match_formulas(p1.formula, p2.formula)
    if inj is None:
        return None
    inj = match_states(p1.automaton_state, p2.automaton_state, (), (), inj)
    if inj is None:
        return None
    for a, b in inj.items():
        if (a in p1.history) != (b in p2.history):
            return None
    # the remaining history names only count
    r1 = sorted(p1.history - inj.sources)
    r2 = sorted(p2.history - inj.targets)
    if len(r1) != len(r2):
        return None
    inj = extend_match(inj, r1, r2)
    return None if (inj is None) else inj.to_permutation()


# ========================================================================= #
# END                                                                       #
# ========================================================================= #
