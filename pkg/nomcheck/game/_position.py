#  ~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~
#  MIT License
#
#  Copyright (c) 2022 The nomcheck Authors
#
#  Distributed under the terms of the MIT License,
#  see LICENSE.txt in the project root for the full license text.
#  ~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~

import dataclasses
from dataclasses import dataclass
from dataclasses import field
from enum import Enum
from typing import FrozenSet
from typing import Iterator
from typing import Optional
from typing import Tuple

from nomcheck.fra import Config
from nomcheck.fra import RegisterAssignment
from nomcheck.logic import Fixpoint
from nomcheck.logic import Formula
from nomcheck.logic import RecBlock
from nomcheck.logic import RecSubst
from nomcheck.logic import ValueBlock
from nomcheck.logic import ValueSubst
from nomcheck.logic import Var
from nomcheck.logic import free_value_vars
from nomcheck.logic import subst_rec
from nomcheck.logic import subst_values
from nomcheck.nominal import Name
from nomcheck.nominal import Nominal
from nomcheck.nominal import Permutation
from nomcheck.nominal import apply
from nomcheck.nominal import iter_names


# ========================================================================= #
# Players                                                                   #
# ========================================================================= #


class Player(Enum):
    DEFENDER = 'D'
    ATTACKER = 'A'

    @property
    def opponent(self) -> 'Player':
        return Player.ATTACKER if (self is Player.DEFENDER) else Player.DEFENDER

    def __str__(self):
        return self.value


# ========================================================================= #
# Closure Triples                                                           #
# ========================================================================= #


@dataclass(frozen=True)
class ClosureTriple(Nominal):
    """
    A subformula `psi` of the root together with the value substitution
    `gamma` and the recursion substitution `theta` that turn it into the
    formula of a position, `expand() == psi{theta}{gamma}`.
    """

    psi: Formula
    gamma: ValueSubst = ()
    theta: RecSubst = ()

    def expand(self) -> Formula:
        return subst_values(subst_rec(self.psi, self.theta), self.gamma)

    # --- closure rules --- #

    def descend(self, child: Formula) -> 'ClosureTriple':
        return ClosureTriple(child, self.gamma, self.theta)

    def bind(self, child: Formula, xs: Tuple[str, ...], names: Tuple[Name, ...], theta: Optional[RecSubst] = None) -> 'ClosureTriple':
        theta = self.theta if (theta is None) else theta
        gamma = _drop_vars(self.gamma, frozenset(xs)) + (ValueBlock(tuple(xs), tuple(names)),)
        # only keep values still visible after the recursion substitution
        live = free_value_vars(subst_rec(child, theta))
        return ClosureTriple(child, _keep_vars(gamma, live), theta)

    def enter_fixpoint(self, names: Tuple[Name, ...]) -> 'ClosureTriple':
        fix = self.psi
        assert isinstance(fix, Fixpoint), f'closure triple is not at a fixpoint: {fix}'
        theta = tuple(b for b in self.theta if b.rec != fix.rec) + (RecBlock(fix.rec, fix),)
        return self.bind(fix.body, fix.params, names, theta=theta)

    def reenter(self, names: Tuple[Name, ...]) -> 'ClosureTriple':
        var = self.psi
        assert isinstance(var, Var), f'closure triple is not at a recursion variable: {var}'
        k = next(i for i, b in enumerate(self.theta) if b.rec == var.rec)
        fix = self.theta[k].fixpoint
        return self.bind(fix.body, fix.params, names, theta=self.theta[:k+1])

    # --- nominal --- #

    def _permute(self, p: Permutation) -> 'ClosureTriple':
        return ClosureTriple(apply(p, self.psi), apply(p, self.gamma), apply(p, self.theta))

    def _iter_names(self) -> Iterator[Name]:
        yield from iter_names(self.psi)
        yield from iter_names(self.gamma)
        yield from iter_names(self.theta)


def _drop_vars(gamma: ValueSubst, xs: FrozenSet[str]) -> ValueSubst:
    return _keep_where(gamma, lambda x: x not in xs)


def _keep_vars(gamma: ValueSubst, xs: FrozenSet[str]) -> ValueSubst:
    return _keep_where(gamma, lambda x: x in xs)


def _keep_where(gamma: ValueSubst, keep) -> ValueSubst:
    blocks = []
    for block in gamma:
        pairs = [(x, a) for x, a in zip(block.vars, block.names) if keep(x)]
        if pairs:
            blocks.append(ValueBlock(tuple(x for x, _ in pairs), tuple(a for _, a in pairs)))
    return tuple(blocks)


# ========================================================================= #
# Positions                                                                 #
# ========================================================================= #


@dataclass(frozen=True)
class Position(Nominal):
    """
    A position of the history-bounded game. Identity is given by the
    automaton state, the history and the expanded formula, the closure
    triple, owner and rank are derived data.
    """

    state: str
    regs: RegisterAssignment
    history: FrozenSet[Name]
    formula: Formula
    owner: Player = field(default=Player.DEFENDER, compare=False)
    rank: int = field(default=0, compare=False)
    triple: Optional[ClosureTriple] = field(default=None, compare=False, repr=False)

    def __post_init__(self):
        object.__setattr__(self, 'history', frozenset(self.history))

    @property
    def config(self) -> Config:
        return Config(self.state, self.regs, self.history)

    @property
    def automaton_state(self):
        return self.state, self.regs

    def _permute(self, p: Permutation) -> 'Position':
        return dataclasses.replace(
            self,
            regs=apply(p, self.regs),
            history=apply(p, self.history),
            formula=apply(p, self.formula),
            triple=None if (self.triple is None) else apply(p, self.triple),
        )

    def _iter_names(self) -> Iterator[Name]:
        yield from iter_names(self.regs)
        yield from iter_names(self.formula)
        yield from sorted(self.history)

    def __str__(self):
        return f'({self.state}, {self.regs}, {{{", ".join(map(str, sorted(self.history)))}}}, {self.formula})'


# ========================================================================= #
# END                                                                       #
# ========================================================================= #
