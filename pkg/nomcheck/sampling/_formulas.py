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
from typing import Tuple

import numpy as np

from nomcheck.logic import And
from nomcheck.logic import BigAnd
from nomcheck.logic import BigOr
from nomcheck.logic import Box
from nomcheck.logic import Diamond
from nomcheck.logic import Eq
from nomcheck.logic import Formula
from nomcheck.logic import Fresh
from nomcheck.logic import Label
from nomcheck.logic import Mu
from nomcheck.logic import Neq
from nomcheck.logic import Not
from nomcheck.logic import Nu
from nomcheck.logic import Or
from nomcheck.logic import Value
from nomcheck.logic import ValueVar
from nomcheck.logic import Var
from nomcheck.logic import free_rec_vars
from nomcheck.logic import free_value_vars
from nomcheck.logic import size as formula_size
from nomcheck.nominal import Name
from nomcheck.util.seeds import RngLike
from nomcheck.util.seeds import make_rng


# (recursion variable, arity, negations above its binder)
_Rec = Tuple[str, int, int]


# ========================================================================= #
# Formula Generator                                                         #
# ========================================================================= #


class _FormulaGenerator(object):

    def __init__(self, rng: np.random.Generator, tags: Sequence[str], binders: int, fixpoints: int, arity: int, names: int, negations: bool):
        assert len(tags) > 0, 'at least one tag is required'
        self.rng = rng
        self.tags = tuple(tags)
        self.binders = binders
        self.fixpoints = fixpoints
        self.arity = arity
        self.names = tuple(Name(i) for i in range(names))
        self.negations = negations
        self._count = 0

    def _fresh_ident(self, stem: str) -> str:
        self._count += 1
        return f'{stem}{self._count}'

    def _choice(self, items: Sequence):
        return items[int(self.rng.integers(len(items)))]

    def _value(self, vals: Tuple[str, ...]) -> Value:
        options = [*self.names, *(ValueVar(x) for x in vals)]
        if not options:
            # no constants and nothing bound, a fresh constant is the only choice
            return Name(0)
        return self._choice(options)

    def _label(self, vals: Tuple[str, ...]) -> Label:
        return Label(self._choice(self.tags), (self._value(vals),))

    def _use(self, body: Formula, var: str) -> Formula:
        # `var != var` is false, so this only adds a use of `var`
        if var in free_value_vars(body):
            return body
        return Or(body, Neq(ValueVar(var), ValueVar(var)))

    def leaf(self, vals: Tuple[str, ...], recs: Tuple[_Rec, ...], negs: int) -> Formula:
        usable = [r for r in recs if (negs - r[2]) % 2 == 0]
        if usable and (self.rng.random() < 0.5):
            rec, arity, _ = self._choice(usable)
            return Var(rec, tuple(self._value(vals) for _ in range(arity)))
        cls = Eq if (self.rng.random() < 0.5) else Neq
        return cls(self._value(vals), self._value(vals))

    def generate(self, budget: int, vals: Tuple[str, ...] = (), recs: Tuple[_Rec, ...] = (), negs: int = 0) -> Formula:
        if budget <= 2:
            return self.leaf(vals, recs, negs)
        options = ['or', 'and', 'diamond', 'box']
        if self.binders > 0:
            options += ['some', 'all', 'fresh']
        if self.fixpoints > 0 and budget >= 4:
            options += ['fix', 'fix']
        if self.negations:
            options += ['not']
        kind = self._choice(options)
        # boolean
        if kind in ('or', 'and'):
            split = int(self.rng.integers(1, budget - 1))
            left = self.generate(split, vals, recs, negs)
            right = self.generate(budget - 1 - split, vals, recs, negs)
            return Or(left, right) if (kind == 'or') else And(left, right)
        if kind == 'not':
            return Not(self.generate(budget - 1, vals, recs, negs + 1))
        # modalities
        if kind in ('diamond', 'box'):
            label = self._label(vals)
            body = self.generate(budget - 2, vals, recs, negs)
            return Diamond(label, body) if (kind == 'diamond') else Box(label, body)
        # quantifiers
        if kind in ('some', 'all', 'fresh'):
            self.binders -= 1
            var = self._fresh_ident('x')
            body = self._use(self.generate(budget - 1, vals + (var,), recs, negs), var)
            return {'some': BigOr, 'all': BigAnd, 'fresh': Fresh}[kind](var, body)
        # recursion
        assert kind == 'fix'
        self.fixpoints -= 1
        rec = self._fresh_ident('X')
        arity = int(self.rng.integers(0, self.arity + 1)) if (budget >= 6) else 0
        params = tuple(self._fresh_ident('y') for _ in range(arity))
        args = tuple(self._value(vals) for _ in range(arity))
        body = self.generate(budget - 1 - 2 * arity, vals + params, recs + ((rec, arity, negs),), negs)
        if rec not in free_rec_vars(body):
            # recurse after one more step
            body = Or(body, Diamond(self._label(vals + params), Var(rec, tuple(ValueVar(y) for y in params))))
        for y in params:
            body = self._use(body, y)
        cls = Mu if (self.rng.random() < 0.5) else Nu
        return cls(rec, params, body, args)


# ========================================================================= #
# Sampling                                                                  #
# ========================================================================= #


def random_formula(
    rng: RngLike = None,
    tags: Sequence[str] = ('o',),
    size: int = 10,
    binders: int = 2,
    fixpoints: int = 2,
    arity: int = 1,
    names: int = 1,
    negations: bool = False,
    fresh_root: bool = False,
    max_size: Optional[int] = None,
) -> Formula:
    """
    A random closed and firm formula of roughly `size` over labels with one
    value each. Every bound value variable is used in its scope and every
    recursion variable occurs in its body, with an even number of negations.
    - `binders` and `fixpoints` limit the number of value quantifiers and fixpoints
    - `names` is the number of constant names `#0, #1, ...` that may occur
    - with `fresh_root` the formula starts with a fresh quantifier
    - `max_size` is a hard limit, formulas over it are drawn again with a smaller budget
    """
    rng = make_rng(rng)
    budget = size if (max_size is None) else min(size, max_size)
    while True:
        gen = _FormulaGenerator(rng, tags=tags, binders=binders, fixpoints=fixpoints, arity=arity, names=names, negations=negations)
        if fresh_root:
            var = 'x0'
            phi = Fresh(var, gen._use(gen.generate(max(budget - 1, 1), (var,)), var))
        else:
            phi = gen.generate(budget)
        if (max_size is None) or (formula_size(phi) <= max_size):
            return phi
        if budget <= 2:
            raise ValueError(f'no formula fits within max_size: {repr(max_size)}')
        budget -= 1


# ========================================================================= #
# END                                                                       #
# ========================================================================= #
