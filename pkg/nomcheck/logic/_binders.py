#  ~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~
#  MIT License
#
#  Copyright (c) 2022 The nomcheck Authors
#
#  Distributed under the terms of the MIT License,
#  see LICENSE.txt in the project root for the full license text.
#  ~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~

import re
from typing import Mapping
from typing import Set
from typing import Tuple

from nomcheck.logic._measures import bound_rec_vars
from nomcheck.logic._measures import free_rec_vars
from nomcheck.logic._measures import subformulas
from nomcheck.logic._syntax import Compare
from nomcheck.logic._syntax import Fixpoint
from nomcheck.logic._syntax import Formula
from nomcheck.logic._syntax import Junction
from nomcheck.logic._syntax import Label
from nomcheck.logic._syntax import Modal
from nomcheck.logic._syntax import Not
from nomcheck.logic._syntax import Quantifier
from nomcheck.logic._syntax import Value
from nomcheck.logic._syntax import ValueVar
from nomcheck.logic._syntax import Var


# ========================================================================= #
# Identifiers                                                               #
# ========================================================================= #


_RE_TRAILING_DIGITS = re.compile(r'[0-9]+$')


def _identifiers(phi: Formula) -> Set[str]:
    idents = set()
    for psi in subformulas(phi):
        if isinstance(psi, Quantifier):
            idents.add(psi.var)
        elif isinstance(psi, Fixpoint):
            idents.add(psi.rec)
            idents.update(psi.params)
        elif isinstance(psi, Var):
            idents.add(psi.rec)
        values = ()
        if isinstance(psi, Compare):
            values = (psi.left, psi.right)
        elif isinstance(psi, Modal):
            values = psi.label.args
        elif isinstance(psi, (Var, Fixpoint)):
            values = psi.args
        idents.update(u.name for u in values if isinstance(u, ValueVar))
    return idents


class _Supply(object):
    """
    Numbered identifiers `x1, x2, ...` that clash with nothing already used.
    """

    def __init__(self, taken: Set[str]):
        self._taken = set(taken)

    def fresh(self, base: str) -> str:
        stem = _RE_TRAILING_DIGITS.sub('', base) or base
        k = 1
        while f'{stem}{k}' in self._taken:
            k += 1
        ident = f'{stem}{k}'
        self._taken.add(ident)
        return ident


# ========================================================================= #
# Normalisation                                                             #
# ========================================================================= #


def normalize_binders(phi: Formula) -> Formula:
    """
    Alpha-rename `phi` so that every fixpoint binder introduces a globally
    unique recursion variable distinct from the free ones, and so that no
    value binder sits inside another binder of the same value variable.
    The first binder of each variable keeps its name, later ones are
    numbered in pre-order. Already normalized formulas are returned as is.
    """
    supply = _Supply(_identifiers(phi))
    used_recs = set(free_rec_vars(phi))
    return _normalize(phi, {}, {}, frozenset(), supply, used_recs)


def _rename_values(values: Tuple[Value, ...], vals: Mapping[str, str]) -> Tuple[Value, ...]:
    return tuple(ValueVar(vals.get(u.name, u.name)) if isinstance(u, ValueVar) else u for u in values)


def _bind_values(xs: Tuple[str, ...], vals: Mapping[str, str], scope: frozenset, supply: _Supply):
    vals = dict(vals)
    new_xs = []
    for x in xs:
        nx = supply.fresh(x) if (x in scope) else x
        vals[x] = nx
        new_xs.append(nx)
    return tuple(new_xs), vals, scope | set(new_xs)


def _normalize(phi: Formula, recs: Mapping[str, str], vals: Mapping[str, str], scope: frozenset, supply: _Supply, used_recs: Set[str]) -> Formula:
    if isinstance(phi, Compare):
        left, right = _rename_values((phi.left, phi.right), vals)
        return type(phi)(left, right)
    if isinstance(phi, Junction):
        # pre-order numbering: left before right
        left = _normalize(phi.left, recs, vals, scope, supply, used_recs)
        right = _normalize(phi.right, recs, vals, scope, supply, used_recs)
        return type(phi)(left, right)
    if isinstance(phi, Not):
        return Not(_normalize(phi.body, recs, vals, scope, supply, used_recs))
    if isinstance(phi, Modal):
        label = Label(phi.label.tag, _rename_values(phi.label.args, vals))
        return type(phi)(label, _normalize(phi.body, recs, vals, scope, supply, used_recs))
    if isinstance(phi, Quantifier):
        (x,), body_vals, body_scope = _bind_values((phi.var,), vals, scope, supply)
        return type(phi)(x, _normalize(phi.body, recs, body_vals, body_scope, supply, used_recs))
    if isinstance(phi, Var):
        return Var(recs.get(phi.rec, phi.rec), _rename_values(phi.args, vals))
    if isinstance(phi, Fixpoint):
        args = _rename_values(phi.args, vals)
        rec = supply.fresh(phi.rec) if (phi.rec in used_recs) else phi.rec
        used_recs.add(rec)
        params, body_vals, body_scope = _bind_values(phi.params, vals, scope, supply)
        body = _normalize(phi.body, {**recs, phi.rec: rec}, body_vals, body_scope, supply, used_recs)
        return type(phi)(rec, params, body, args)
    raise TypeError(f'not a formula: {repr(phi)}')


def is_normalized(phi: Formula) -> bool:
    recs = bound_rec_vars(phi)
    if len(set(recs)) != len(recs):
        return False
    if set(recs) & free_rec_vars(phi):
        return False
    return normalize_binders(phi) == phi


# ========================================================================= #
# END                                                                       #
# ========================================================================= #
