#  ~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~
#  MIT License
#
#  Copyright (c) 2022 The nomcheck Authors
#
#  Distributed under the terms of the MIT License,
#  see LICENSE.txt in the project root for the full license text.
#  ~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~

from nomcheck.logic._syntax import And
from nomcheck.logic._syntax import BigAnd
from nomcheck.logic._syntax import BigOr
from nomcheck.logic._syntax import Box
from nomcheck.logic._syntax import Diamond
from nomcheck.logic._syntax import Eq
from nomcheck.logic._syntax import Fixpoint
from nomcheck.logic._syntax import Formula
from nomcheck.logic._syntax import Fresh
from nomcheck.logic._syntax import Neq
from nomcheck.logic._syntax import Not
from nomcheck.logic._syntax import Or
from nomcheck.logic._syntax import Quantifier
from nomcheck.logic._syntax import Var


# ========================================================================= #
# Printer                                                                   #
# ========================================================================= #


# precedence levels, `!` and modalities bind tightest
_DISJ, _CONJ, _UNARY = 0, 1, 2

_QUANTIFIERS = {BigOr: 'some', BigAnd: 'all', Fresh: 'fresh'}


def format_formula(phi: Formula) -> str:
    """
    Print `phi` in the concrete syntax read by `parse_formula`.
    Binders extend as far right as possible, so an open binder is
    only printed bare when nothing follows it.
    """
    return _fmt(phi, _DISJ, closed=False)


def _values(values) -> str:
    return ', '.join(map(str, values))


def _fmt(phi: Formula, level: int, closed: bool) -> str:
    # `closed` is set when more text follows, so binders must be wrapped
    if isinstance(phi, Eq):
        return f'{phi.left} = {phi.right}'
    if isinstance(phi, Neq):
        return f'{phi.left} != {phi.right}'
    if isinstance(phi, Var):
        return f'{phi.rec}({_values(phi.args)})' if phi.args else phi.rec
    if isinstance(phi, Or):
        if level > _DISJ:
            return f'({_fmt(phi.left, _DISJ, True)} | {_fmt(phi.right, _CONJ, False)})'
        return f'{_fmt(phi.left, _DISJ, True)} | {_fmt(phi.right, _CONJ, closed)}'
    if isinstance(phi, And):
        if level > _CONJ:
            return f'({_fmt(phi.left, _CONJ, True)} & {_fmt(phi.right, _UNARY, False)})'
        return f'{_fmt(phi.left, _CONJ, True)} & {_fmt(phi.right, _UNARY, closed)}'
    if isinstance(phi, Not):
        return f'!{_fmt(phi.body, _UNARY, closed)}'
    if isinstance(phi, Diamond):
        return f'<{phi.label}> {_fmt(phi.body, _UNARY, closed)}'
    if isinstance(phi, Box):
        return f'[{phi.label}] {_fmt(phi.body, _UNARY, closed)}'
    if isinstance(phi, Quantifier):
        text = f'{_QUANTIFIERS[type(phi)]} {phi.var}. {_fmt(phi.body, _DISJ, False)}'
        return f'({text})' if closed else text
    if isinstance(phi, Fixpoint):
        if phi.params or phi.args:
            return f'{phi.keyword} {phi.rec}({", ".join(phi.params)}). ({_fmt(phi.body, _DISJ, False)})({_values(phi.args)})'
        text = f'{phi.keyword} {phi.rec}. {_fmt(phi.body, _DISJ, False)}'
        return f'({text})' if closed else text
    raise TypeError(f'not a formula: {repr(phi)}')


# ========================================================================= #
# END                                                                       #
# ========================================================================= #
