#  ~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~
#  MIT License
#
#  Copyright (c) 2022 The nomcheck Authors
#
#  Distributed under the terms of the MIT License,
#  see LICENSE.txt in the project root for the full license text.
#  ~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~

"""
Abstract syntax of fresh HML with recursion.

Both polarities of every connective are native constructors so that
negation can be eliminated before games are built. All nodes are frozen
dataclasses and names act on them structurally through the nominal
protocol, visiting fields from left to right in the order they print.
"""

import dataclasses
from dataclasses import dataclass
from typing import Iterator
from typing import Optional
from typing import Tuple
from typing import Type
from typing import Union

from nomcheck.nominal import Name
from nomcheck.nominal import Nominal
from nomcheck.nominal import Permutation
from nomcheck.nominal import apply
from nomcheck.nominal import iter_names


# ========================================================================= #
# Errors                                                                    #
# ========================================================================= #


class FormulaError(ValueError):
    """
    A formula is well-formed text but not a valid formula,
    eg. arities disagree or a recursion variable is negated.
    """

    def __init__(self, msg: str, line: Optional[int] = None, column: Optional[int] = None):
        self.msg = msg
        self.line = line
        self.column = column
        super().__init__(msg if (line is None) else f'{msg} (line {line}, column {column})')


# ========================================================================= #
# Values & Labels                                                           #
# ========================================================================= #


@dataclass(frozen=True)
class ValueVar(Nominal):
    name: str

    def _permute(self, p: Permutation) -> 'ValueVar':
        return self

    def _iter_names(self) -> Iterator[Name]:
        return iter(())

    def __str__(self):
        return self.name


Value = Union[Name, ValueVar]


def is_value(u) -> bool:
    return isinstance(u, (Name, ValueVar))


@dataclass(frozen=True)
class Label(Nominal):
    tag: str
    args: Tuple[Value, ...] = ()

    def _permute(self, p: Permutation) -> 'Label':
        return Label(self.tag, apply(p, self.args))

    def _iter_names(self) -> Iterator[Name]:
        return iter_names(self.args)

    def __str__(self):
        if not self.args:
            return self.tag
        return f'{self.tag}:{",".join(map(str, self.args))}'


# ========================================================================= #
# Formulas                                                                  #
# ========================================================================= #


class Formula(Nominal):

    __slots__ = ()

    def _permute(self, p: Permutation):
        return dataclasses.replace(self, **{f.name: apply(p, getattr(self, f.name)) for f in dataclasses.fields(self)})

    def _iter_names(self) -> Iterator[Name]:
        for f in dataclasses.fields(self):
            yield from iter_names(getattr(self, f.name))

    def __str__(self):
        from nomcheck.logic._printer import format_formula
        return format_formula(self)


# --- atoms --- #


@dataclass(frozen=True)
class Compare(Formula):
    left: Value
    right: Value


@dataclass(frozen=True)
class Eq(Compare):
    pass


@dataclass(frozen=True)
class Neq(Compare):
    pass


# --- boolean --- #


@dataclass(frozen=True)
class Junction(Formula):
    left: Formula
    right: Formula


@dataclass(frozen=True)
class Or(Junction):
    pass


@dataclass(frozen=True)
class And(Junction):
    pass


@dataclass(frozen=True)
class Not(Formula):
    body: Formula


# --- name quantifiers --- #


@dataclass(frozen=True)
class Quantifier(Formula):
    var: str
    body: Formula


@dataclass(frozen=True)
class BigOr(Quantifier):
    pass


@dataclass(frozen=True)
class BigAnd(Quantifier):
    pass


@dataclass(frozen=True)
class Fresh(Quantifier):
    pass


# --- modalities --- #


@dataclass(frozen=True)
class Modal(Formula):
    label: Label
    body: Formula


@dataclass(frozen=True)
class Diamond(Modal):
    pass


@dataclass(frozen=True)
class Box(Modal):
    pass


# --- recursion --- #


@dataclass(frozen=True)
class Fixpoint(Formula):
    """
    The application `(sigma X(params). body)(args)`.
    """
    rec: str
    params: Tuple[str, ...]
    body: Formula
    args: Tuple[Value, ...] = ()

    @property
    def keyword(self) -> str:
        raise NotImplementedError

    def dual(self) -> Type['Fixpoint']:
        raise NotImplementedError

    def applied_to(self, args: Tuple[Value, ...]) -> 'Fixpoint':
        return dataclasses.replace(self, args=tuple(args))


@dataclass(frozen=True)
class Mu(Fixpoint):

    @property
    def keyword(self) -> str:
        return 'mu'

    def dual(self) -> Type[Fixpoint]:
        return Nu


@dataclass(frozen=True)
class Nu(Fixpoint):

    @property
    def keyword(self) -> str:
        return 'nu'

    def dual(self) -> Type[Fixpoint]:
        return Mu


@dataclass(frozen=True)
class Var(Formula):
    """
    The applied recursion variable `X(args)`.
    """
    rec: str
    args: Tuple[Value, ...] = ()


# ========================================================================= #
# Dual Constructors                                                         #
# ========================================================================= #


DUALS = {
    Eq: Neq, Neq: Eq,
    Or: And, And: Or,
    BigOr: BigAnd, BigAnd: BigOr,
    Fresh: Fresh,
    Diamond: Box, Box: Diamond,
    Mu: Nu, Nu: Mu,
}


# ========================================================================= #
# Substitution Blocks                                                       #
# ========================================================================= #


@dataclass(frozen=True)
class ValueBlock(Nominal):
    """
    One block `{names/vars}` of a value substitution.
    """
    vars: Tuple[str, ...]
    names: Tuple[Name, ...]

    def __post_init__(self):
        if len(self.vars) != len(self.names):
            raise ValueError(f'substitution block has {len(self.vars)} variables but {len(self.names)} names')
        if len(set(self.vars)) != len(self.vars):
            raise ValueError(f'substitution block binds a variable twice: {repr(self.vars)}')

    def _permute(self, p: Permutation) -> 'ValueBlock':
        return ValueBlock(self.vars, apply(p, self.names))

    def _iter_names(self) -> Iterator[Name]:
        return iter(self.names)


@dataclass(frozen=True)
class RecBlock(Nominal):
    """
    One block `{sigma X(x). phi / X}` of a recursion substitution,
    the definition is stored as the fixpoint node itself.
    """
    rec: str
    fixpoint: Fixpoint

    def _permute(self, p: Permutation) -> 'RecBlock':
        return RecBlock(self.rec, apply(p, self.fixpoint))

    def _iter_names(self) -> Iterator[Name]:
        return iter_names(self.fixpoint)


ValueSubst = Tuple[ValueBlock, ...]
RecSubst = Tuple[RecBlock, ...]


# ========================================================================= #
# END                                                                       #
# ========================================================================= #
