#  ~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~
#  MIT License
#
#  Copyright (c) 2022 The nomcheck Authors
#
#  Distributed under the terms of the MIT License,
#  see LICENSE.txt in the project root for the full license text.
#  ~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~

from typing import Dict
from typing import Mapping
from typing import Optional
from typing import Tuple

from nomcheck.logic._syntax import Compare
from nomcheck.logic._syntax import Fixpoint
from nomcheck.logic._syntax import Formula
from nomcheck.logic._syntax import FormulaError
from nomcheck.logic._syntax import Junction
from nomcheck.logic._syntax import Label
from nomcheck.logic._syntax import Modal
from nomcheck.logic._syntax import Not
from nomcheck.logic._syntax import Quantifier
from nomcheck.logic._syntax import Var
from nomcheck.logic._syntax import is_value


Signature = Mapping[str, int]


# ========================================================================= #
# Validation                                                                #
# ========================================================================= #


def validate_formula(phi: Formula, signature: Optional[Signature] = None) -> Formula:
    """
    Check that:
    - fixpoints bind distinct parameters and are applied to as many values
    - every use of a recursion variable agrees with its arity
    - labels agree with the tag signature, if one is given
    - bound recursion variables occur under an even number of negations
    Returns `phi` unchanged, raises `FormulaError` otherwise.
    """
    _validate(phi, {}, {}, signature, {})
    return phi


def _check_label(label: Label, signature: Optional[Signature]):
    if not all(is_value(u) for u in label.args):
        raise FormulaError(f'label {label} has arguments that are not values: {label.args}')
    if signature is None:
        return
    if label.tag not in signature:
        raise FormulaError(f'unknown tag: {repr(label.tag)}, declared tags are: {sorted(signature)}')
    if signature[label.tag] != len(label.args):
        raise FormulaError(f'tag {repr(label.tag)} has arity {signature[label.tag]} but is applied to {len(label.args)} values')


def _validate(phi: Formula, arities: Dict[str, int], negs: Dict[str, int], signature: Optional[Signature], free_arities: Dict[str, int]):
    if isinstance(phi, Compare):
        if not (is_value(phi.left) and is_value(phi.right)):
            raise FormulaError(f'comparisons must be between values, got: {repr(phi)}')
    elif isinstance(phi, Junction):
        _validate(phi.left, arities, negs, signature, free_arities)
        _validate(phi.right, arities, negs, signature, free_arities)
    elif isinstance(phi, Not):
        _validate(phi.body, arities, {x: n + 1 for x, n in negs.items()}, signature, free_arities)
    elif isinstance(phi, Quantifier):
        _validate(phi.body, arities, negs, signature, free_arities)
    elif isinstance(phi, Modal):
        _check_label(phi.label, signature)
        _validate(phi.body, arities, negs, signature, free_arities)
    elif isinstance(phi, Fixpoint):
        _check_arity(phi.rec, phi.params, phi.args)
        _validate(phi.body, {**arities, phi.rec: len(phi.params)}, {**negs, phi.rec: 0}, signature, free_arities)
    elif isinstance(phi, Var):
        if phi.rec in arities:
            if arities[phi.rec] != len(phi.args):
                raise FormulaError(f'recursion variable {repr(phi.rec)} has arity {arities[phi.rec]} but is applied to {len(phi.args)} values')
            if negs[phi.rec] % 2 != 0:
                raise FormulaError(f'recursion variable {repr(phi.rec)} occurs under an odd number of negations')
        else:
            # free variables only need to agree with themselves
            if free_arities.setdefault(phi.rec, len(phi.args)) != len(phi.args):
                raise FormulaError(f'free recursion variable {repr(phi.rec)} is used with different arities')
    else:
        raise TypeError(f'not a formula: {repr(phi)}')


def _check_arity(rec: str, params: Tuple[str, ...], args: tuple):
    if len(set(params)) != len(params):
        raise FormulaError(f'fixpoint {repr(rec)} binds a parameter twice: {params}')
    if len(params) != len(args):
        raise FormulaError(f'fixpoint {repr(rec)} has {len(params)} parameters but is applied to {len(args)} values')
    if not all(is_value(u) for u in args):
        raise FormulaError(f'fixpoint {repr(rec)} is applied to non-values: {args}')


# ========================================================================= #
# END                                                                       #
# ========================================================================= #
