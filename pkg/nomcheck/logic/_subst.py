#  ~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~
#  MIT License
#
#  Copyright (c) 2022 The nomcheck Authors
#
#  Distributed under the terms of the MIT License,
#  see LICENSE.txt in the project root for the full license text.
#  ~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~

import dataclasses
from typing import Dict
from typing import FrozenSet
from typing import Mapping
from typing import Tuple
from typing import Union

from nomcheck.logic._measures import free_rec_vars
from nomcheck.logic._measures import free_value_vars
from nomcheck.logic._syntax import Compare
from nomcheck.logic._syntax import Fixpoint
from nomcheck.logic._syntax import Formula
from nomcheck.logic._syntax import Junction
from nomcheck.logic._syntax import Label
from nomcheck.logic._syntax import Modal
from nomcheck.logic._syntax import Not
from nomcheck.logic._syntax import Quantifier
from nomcheck.logic._syntax import RecBlock
from nomcheck.logic._syntax import RecSubst
from nomcheck.logic._syntax import Value
from nomcheck.logic._syntax import ValueBlock
from nomcheck.logic._syntax import ValueSubst
from nomcheck.logic._syntax import ValueVar
from nomcheck.logic._syntax import Var
from nomcheck.nominal import Name


class CaptureError(ValueError):
    pass


# ========================================================================= #
# Value Substitution                                                        #
# ========================================================================= #


def _flatten_value_subst(g: Union[ValueSubst, Mapping[str, Name]]) -> Dict[str, Name]:
    if isinstance(g, Mapping):
        return dict(g)
    # (phi{g1}){g2}: once a variable is replaced later blocks no longer see it
    mapping = {}
    for block in g:
        for x, a in zip(block.vars, block.names):
            mapping.setdefault(x, a)
    return mapping


def _subst_value(u: Value, m: Mapping[str, Name]) -> Value:
    if isinstance(u, ValueVar):
        return m.get(u.name, u)
    return u


def _subst_values(vals: Tuple[Value, ...], m: Mapping[str, Name]) -> Tuple[Value, ...]:
    return tuple(_subst_value(u, m) for u in vals)


def _without(m: Mapping[str, Name], xs) -> Mapping[str, Name]:
    if not any(x in m for x in xs):
        return m
    return {k: v for k, v in m.items() if k not in xs}


def subst_values(phi: Formula, g: Union[ValueSubst, Mapping[str, Name]]) -> Formula:
    """
    Replace free value variables by names. `g` is either a sequence of
    `ValueBlock`s applied left to right or a plain `{var: name}` mapping.
    """
    m = _flatten_value_subst(g)
    if not m:
        return phi
    return _sv(phi, m)


def _sv(phi: Formula, m: Mapping[str, Name]) -> Formula:
    if not m:
        return phi
    if isinstance(phi, Compare):
        return type(phi)(_subst_value(phi.left, m), _subst_value(phi.right, m))
    if isinstance(phi, Junction):
        return type(phi)(_sv(phi.left, m), _sv(phi.right, m))
    if isinstance(phi, Not):
        return Not(_sv(phi.body, m))
    if isinstance(phi, Quantifier):
        return type(phi)(phi.var, _sv(phi.body, _without(m, (phi.var,))))
    if isinstance(phi, Modal):
        return type(phi)(Label(phi.label.tag, _subst_values(phi.label.args, m)), _sv(phi.body, m))
    if isinstance(phi, Var):
        return Var(phi.rec, _subst_values(phi.args, m))
    if isinstance(phi, Fixpoint):
        return type(phi)(phi.rec, phi.params, _sv(phi.body, _without(m, phi.params)), _subst_values(phi.args, m))
    raise TypeError(f'not a formula: {repr(phi)}')


# ========================================================================= #
# Recursion Substitution                                                    #
# ========================================================================= #


def subst_rec(phi: Formula, th: RecSubst) -> Formula:
    """
    Replace every free applied variable `X(u)` with `dom(th)` containing `X`
    by the application `(sigma X(x). psi)(u)` of its definition. The inserted
    definition first receives the blocks preceding the block of `X`, so the
    result is closed whenever `th` covers all free recursion variables.
    """
    if not th:
        return phi
    index = {}
    for k, block in enumerate(th):
        index[block.rec] = k
    if len(index) != len(th):
        raise ValueError(f'recursion substitution binds a variable twice: {[b.rec for b in th]}')
    cache = {}

    def definition(rec: str) -> Fixpoint:
        if rec not in cache:
            k = index[rec]
            cache[rec] = subst_rec(th[k].fixpoint, th[:k])
        return cache[rec]

    return _sr(phi, index, definition, frozenset(), frozenset(), frozenset())


def _sr(phi: Formula, index, definition, shadowed: FrozenSet[str], bound_vals: FrozenSet[str], bound_recs: FrozenSet[str]) -> Formula:
    if isinstance(phi, Compare):
        return phi
    if isinstance(phi, Junction):
        return type(phi)(_sr(phi.left, index, definition, shadowed, bound_vals, bound_recs), _sr(phi.right, index, definition, shadowed, bound_vals, bound_recs))
    if isinstance(phi, Not):
        return Not(_sr(phi.body, index, definition, shadowed, bound_vals, bound_recs))
    if isinstance(phi, Modal):
        return type(phi)(phi.label, _sr(phi.body, index, definition, shadowed, bound_vals, bound_recs))
    if isinstance(phi, Quantifier):
        return type(phi)(phi.var, _sr(phi.body, index, definition, shadowed, bound_vals | {phi.var}, bound_recs))
    if isinstance(phi, Fixpoint):
        body = _sr(phi.body, index, definition, shadowed | {phi.rec}, bound_vals | set(phi.params), bound_recs | {phi.rec})
        return dataclasses.replace(phi, body=body)
    if isinstance(phi, Var):
        if (phi.rec in shadowed) or (phi.rec not in index):
            return phi
        fix = definition(phi.rec)
        captured = (free_value_vars(fix.applied_to(())) & bound_vals) | (free_rec_vars(fix) & bound_recs)
        if captured:
            raise CaptureError(f'substituting the definition of {repr(phi.rec)} would capture: {sorted(captured)}')
        return fix.applied_to(phi.args)
    raise TypeError(f'not a formula: {repr(phi)}')


# ========================================================================= #
# Unfolding                                                                 #
# ========================================================================= #


def unfold(phi: Formula) -> Formula:
    """
    `(sigma X(x). psi)(a)` becomes `(psi{sigma X(x). psi / X}){a/x}`.
    """
    if not isinstance(phi, Fixpoint):
        raise TypeError(f'only fixpoint applications can be unfolded, got: {phi}')
    if len(phi.args) != len(phi.params):
        raise ValueError(f'fixpoint {repr(phi.rec)} has {len(phi.params)} parameters but is applied to {len(phi.args)} values')
    if not all(isinstance(a, Name) for a in phi.args):
        raise ValueError(f'fixpoint {repr(phi.rec)} is applied to unresolved values: {phi.args}, unfolding requires names')
    body = subst_rec(phi.body, (RecBlock(phi.rec, phi),))
    return subst_values(body, (ValueBlock(phi.params, phi.args),))


# ========================================================================= #
# END                                                                       #
# ========================================================================= #
