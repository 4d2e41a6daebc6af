#  ~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~
#  MIT License
#
#  Copyright (c) 2022 The nomcheck Authors
#
#  Distributed under the terms of the MIT License,
#  see LICENSE.txt in the project root for the full license text.
#  ~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~

from typing import FrozenSet
from typing import Iterator
from typing import Tuple

from nomcheck.logic._syntax import Compare
from nomcheck.logic._syntax import Fixpoint
from nomcheck.logic._syntax import Formula
from nomcheck.logic._syntax import Junction
from nomcheck.logic._syntax import Modal
from nomcheck.logic._syntax import Not
from nomcheck.logic._syntax import Quantifier
from nomcheck.logic._syntax import Value
from nomcheck.logic._syntax import ValueVar
from nomcheck.logic._syntax import Var


# ========================================================================= #
# Traversal                                                                 #
# ========================================================================= #


def children(phi: Formula) -> Tuple[Formula, ...]:
    if isinstance(phi, Junction):
        return phi.left, phi.right
    if isinstance(phi, (Not, Quantifier, Modal, Fixpoint)):
        return phi.body,
    if isinstance(phi, (Compare, Var)):
        return ()
    raise TypeError(f'not a formula: {repr(phi)}')


def subformulas(phi: Formula) -> Iterator[Formula]:
    """
    Pre-order traversal of all subformula occurrences.
    """
    stack = [phi]
    while stack:
        psi = stack.pop()
        yield psi
        stack.extend(reversed(children(psi)))


def _value_vars(values: Tuple[Value, ...]) -> FrozenSet[str]:
    return frozenset(u.name for u in values if isinstance(u, ValueVar))


# ========================================================================= #
# Measures                                                                  #
# ========================================================================= #


def size(phi: Formula) -> int:
    if isinstance(phi, Compare):
        return 2
    if isinstance(phi, Junction):
        return 1 + size(phi.left) + size(phi.right)
    if isinstance(phi, (Not, Quantifier)):
        return 1 + size(phi.body)
    if isinstance(phi, Modal):
        return 1 + len(phi.label.args) + size(phi.body)
    if isinstance(phi, Var):
        return 1 + len(phi.args)
    if isinstance(phi, Fixpoint):
        return 1 + size(phi.body) + 2 * len(phi.args)
    raise TypeError(f'not a formula: {repr(phi)}')


def bounding_depth(phi: Formula) -> int:
    if isinstance(phi, (Compare, Var)):
        return 0
    if isinstance(phi, Junction):
        return max(bounding_depth(phi.left), bounding_depth(phi.right))
    if isinstance(phi, (Not, Modal)):
        return bounding_depth(phi.body)
    if isinstance(phi, Quantifier):
        return 1 + bounding_depth(phi.body)
    if isinstance(phi, Fixpoint):
        return len(phi.params) + bounding_depth(phi.body)
    raise TypeError(f'not a formula: {repr(phi)}')


def count_negations(phi: Formula) -> int:
    return sum(1 for psi in subformulas(phi) if isinstance(psi, Not))


# ========================================================================= #
# Binding Analysis                                                          #
# ========================================================================= #


def free_value_vars(phi: Formula) -> FrozenSet[str]:
    if isinstance(phi, Compare):
        return _value_vars((phi.left, phi.right))
    if isinstance(phi, Junction):
        return free_value_vars(phi.left) | free_value_vars(phi.right)
    if isinstance(phi, Not):
        return free_value_vars(phi.body)
    if isinstance(phi, Quantifier):
        return free_value_vars(phi.body) - {phi.var}
    if isinstance(phi, Modal):
        return _value_vars(phi.label.args) | free_value_vars(phi.body)
    if isinstance(phi, Var):
        return _value_vars(phi.args)
    if isinstance(phi, Fixpoint):
        return (free_value_vars(phi.body) - set(phi.params)) | _value_vars(phi.args)
    raise TypeError(f'not a formula: {repr(phi)}')


def free_rec_vars(phi: Formula) -> FrozenSet[str]:
    if isinstance(phi, Var):
        return frozenset([phi.rec])
    if isinstance(phi, Fixpoint):
        return free_rec_vars(phi.body) - {phi.rec}
    return frozenset().union(*(free_rec_vars(psi) for psi in children(phi)))


def bound_rec_vars(phi: Formula) -> Tuple[str, ...]:
    """
    Recursion variables of all fixpoint binders in pre-order, with repetition.
    """
    return tuple(psi.rec for psi in subformulas(phi) if isinstance(psi, Fixpoint))


def is_firm(phi: Formula) -> bool:
    return not free_value_vars(phi)


def is_closed(phi: Formula) -> bool:
    return not free_rec_vars(phi)


def is_negation_free(phi: Formula) -> bool:
    return count_negations(phi) == 0


def zeta(phi: Formula) -> int:
    return len(free_value_vars(phi))


# ========================================================================= #
# END                                                                       #
# ========================================================================= #
