#  ~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~
#  MIT License
#
#  Copyright (c) 2022 The nomcheck Authors
#
#  Distributed under the terms of the MIT License,
#  see LICENSE.txt in the project root for the full license text.
#  ~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~

"""
Direct evaluation of formulas over a finite pool of names.

The pool stands in for the infinite set of names, so the result is
only meaningful when the pool is large enough for the formula and the
histories involved. With a `bound` the transition system is cut down
the same way the bounded game does: histories hold at most `bound + 1`
names and successor histories are trimmed with `well_bound`.
"""

import itertools
import logging
from dataclasses import dataclass
from dataclasses import field
from typing import Dict
from typing import FrozenSet
from typing import Iterable
from typing import Mapping
from typing import Optional
from typing import Set
from typing import Tuple

from nomcheck.fra import Config
from nomcheck.fra import Fra
from nomcheck.fra import step
from nomcheck.game import check_config_against_model
from nomcheck.game import grade
from nomcheck.game import well_bound
from nomcheck.logic import BigAnd
from nomcheck.logic import BigOr
from nomcheck.logic import Box
from nomcheck.logic import Compare
from nomcheck.logic import Diamond
from nomcheck.logic import Eq
from nomcheck.logic import Fixpoint
from nomcheck.logic import Formula
from nomcheck.logic import Fresh
from nomcheck.logic import Junction
from nomcheck.logic import Modal
from nomcheck.logic import Mu
from nomcheck.logic import Not
from nomcheck.logic import Or
from nomcheck.logic import Quantifier
from nomcheck.logic import Value
from nomcheck.logic import Var
from nomcheck.logic import free_rec_vars
from nomcheck.logic import subst_values
from nomcheck.nominal import Name
from nomcheck.nominal import support
from nomcheck.oracle._pool import ConfigSet
from nomcheck.oracle._pool import NamePool
from nomcheck.oracle._pool import check_in_pool
from nomcheck.oracle._pool import default_pool
from nomcheck.oracle._pool import enumerate_configs
from nomcheck.util.profiling import Timer


log = logging.getLogger(__name__)


# ========================================================================= #
# Variable Assignments                                                      #
# ========================================================================= #


@dataclass(frozen=True)
class RecBinding(object):
    """
    The meaning of a recursion variable: a set of configurations for
    every tuple of argument names, together with the names it depends on.
    """
    values: Mapping[Tuple[Name, ...], ConfigSet] = field(default_factory=dict)
    support: FrozenSet[Name] = frozenset()


VariableAssignment = Mapping[str, RecBinding]


# ========================================================================= #
# Evaluator                                                                 #
# ========================================================================= #


class Evaluator(object):
    """
    Evaluates formulas to sets of configurations of `fra` over `pool`.
    Closed subformulas are memoized, so one evaluator should be reused for
    many formulas over the same automaton, pool and bound.

    Without `roots` the universe is every configuration over the pool.
    With `roots` it only holds the configurations reachable from them
    through the successors that evaluation asks for. The universe then
    grows until no evaluation step leaves it, and results are exact on it.
    """

    def __init__(self, fra: Fra, pool: NamePool, bound: Optional[int] = None, roots: Optional[Iterable[Config]] = None):
        self.fra = fra
        self.pool = frozenset(pool)
        self.bound = bound
        self._names = sorted(self.pool)
        self.reachable_only = roots is not None
        if self.reachable_only:
            self.universe: ConfigSet = frozenset(roots)
            for c in self.universe:
                check_in_pool(self.pool, c.history, what='root history names')
        else:
            self.universe: ConfigSet = enumerate_configs(fra, self.pool, max_history=None if (bound is None) else bound + 1)
        self._closed: Dict[Formula, ConfigSet] = {}
        self._fixpoints: Dict[Fixpoint, Dict[Tuple[Name, ...], ConfigSet]] = {}
        self._steps: Dict[tuple, Tuple[Config, ...]] = {}
        self._free: Dict[Formula, FrozenSet[str]] = {}
        # successor queries seen so far and configurations found outside the universe
        self._queries: Set[Tuple[str, Name, Optional[FrozenSet[Name]]]] = set()
        self._outside: Set[Config] = set()
        self.iterations = 0
        self.rounds = 0

    def __repr__(self):
        return f'{self.__class__.__name__}(pool={len(self.pool)}, universe={len(self.universe)}, bound={self.bound})'

    # --- helper --- #

    def _free_recs(self, phi: Formula) -> FrozenSet[str]:
        recs = self._free.get(phi)
        if recs is None:
            recs = self._free[phi] = free_rec_vars(phi)
        return recs

    def protected(self, phi: Formula, xi: VariableAssignment) -> FrozenSet[Name]:
        """
        The names `phi` depends on, including those of the recursion
        variables it mentions.
        """
        names = set(support(phi))
        for rec in self._free_recs(phi):
            names.update(xi[rec].support)
        return frozenset(names)

    def _as_names(self, values: Tuple[Value, ...], where: Formula) -> Tuple[Name, ...]:
        for u in values:
            if not isinstance(u, Name):
                raise ValueError(f'formula is not firm, found value variable {repr(str(u))} in: {where}')
        return tuple(values)

    def _step(self, cfg: Config, query: Tuple[str, Name, Optional[FrozenSet[Name]]]) -> Tuple[Config, ...]:
        key = (cfg, *query)
        succs = self._steps.get(key)
        if succs is None:
            tag, a, protected = query
            succs = step(self.fra, cfg, tag, a)
            if self.bound is not None:
                succs = {Config(c.state, c.regs, well_bound(c.history, c.automaton_state, protected, self.bound)) for c in succs}
            succs = self._steps[key] = tuple(succs)
        return succs

    def _successors(self, cfg: Config, tag: str, a: Name, protected: FrozenSet[Name]) -> Tuple[Config, ...]:
        query = (tag, a, protected if (self.bound is not None) else None)
        succs = self._step(cfg, query)
        if self.reachable_only:
            self._queries.add(query)
            self._outside.update(s for s in succs if s not in self.universe)
        return succs

    def _grow(self):
        """
        Add the configurations found outside the universe, closed under
        every successor query seen so far, and drop results that were
        computed on the smaller universe.
        """
        added = set(self._outside)
        frontier = list(added)
        while frontier:
            cfg = frontier.pop()
            for query in self._queries:
                for s in self._step(cfg, query):
                    if (s not in self.universe) and (s not in added):
                        added.add(s)
                        frontier.append(s)
        self.universe = self.universe | added
        self._outside.clear()
        self._closed.clear()
        self._fixpoints.clear()
        log.debug(f'oracle: universe grew by {len(added)} to {len(self.universe)} configurations')

    # --- evaluation --- #

    def evaluate(self, phi: Formula, xi: Optional[VariableAssignment] = None) -> ConfigSet:
        xi = {} if (xi is None) else dict(xi)
        unbound = self._free_recs(phi) - set(xi)
        if unbound:
            raise KeyError(f'recursion variables without assignment: {sorted(unbound)}')
        check_in_pool(self.pool, support(phi), what='formula names')
        for rec, binding in xi.items():
            check_in_pool(self.pool, binding.support, what=f'names of recursion variable {repr(rec)}')
        if not self.reachable_only:
            return self._eval(phi, xi)
        if xi:
            raise ValueError('recursion variables cannot be assigned when the universe is grown from roots')
        while True:
            self.rounds += 1
            result = self._eval(phi, xi)
            if not self._outside:
                return result
            self._grow()

    def _eval(self, phi: Formula, xi: VariableAssignment) -> ConfigSet:
        closed = not self._free_recs(phi)
        if closed and (phi in self._closed):
            return self._closed[phi]
        result = self._eval_uncached(phi, xi)
        if closed:
            self._closed[phi] = result
        return result

    def _eval_uncached(self, phi: Formula, xi: VariableAssignment) -> ConfigSet:
        U = self.universe
        # atoms
        if isinstance(phi, Compare):
            a, b = self._as_names((phi.left, phi.right), phi)
            return U if ((a == b) == isinstance(phi, Eq)) else frozenset()
        # boolean
        if isinstance(phi, Junction):
            left, right = self._eval(phi.left, xi), self._eval(phi.right, xi)
            return (left | right) if isinstance(phi, Or) else (left & right)
        if isinstance(phi, Not):
            return U - self._eval(phi.body, xi)
        # quantifiers
        if isinstance(phi, Fresh):
            return self._eval_fresh(phi, xi)
        if isinstance(phi, Quantifier):
            parts = [self._eval(subst_values(phi.body, {phi.var: a}), xi) for a in self._names]
            if isinstance(phi, BigOr):
                return frozenset().union(*parts)
            assert isinstance(phi, BigAnd)
            return U.intersection(*parts)
        # modalities
        if isinstance(phi, Modal):
            return self._eval_modal(phi, xi)
        # recursion
        if isinstance(phi, Fixpoint):
            args = self._as_names(phi.args, phi)
            values = self._fixpoint(phi.applied_to(()), xi)
            if args not in values:
                raise ValueError(f'fixpoint applied to {len(args)} name(s) but binds {len(phi.params)} parameter(s): {phi}')
            return values[args]
        if isinstance(phi, Var):
            args = self._as_names(phi.args, phi)
            values = xi[phi.rec].values
            if args not in values:
                raise ValueError(f'recursion variable {repr(phi.rec)} has no value for arguments: {args}')
            return values[args]
        raise TypeError(f'not a formula: {repr(phi)}')

    def _eval_fresh(self, phi: Fresh, xi: VariableAssignment) -> ConfigSet:
        protected = self.protected(phi, xi)
        result = set()
        for a in self._names:
            if a in protected:
                continue
            inner = self._eval(subst_values(phi.body, {phi.var: a}), xi)
            result.update(c for c in inner if a not in c.history)
        return frozenset(result)

    def _eval_modal(self, phi: Modal, xi: VariableAssignment) -> ConfigSet:
        if len(phi.label.args) != 1:
            raise ValueError(f'automaton labels carry exactly one name, got: <{phi.label}>')
        (a,) = self._as_names(phi.label.args, phi)
        tag = phi.label.tag
        body = self._eval(phi.body, xi)
        protected = self.protected(phi.body, xi)
        quantify = any if isinstance(phi, Diamond) else all
        assert isinstance(phi, (Diamond, Box))
        return frozenset(
            c for c in self.universe
            if quantify(s in body for s in self._successors(c, tag, a, protected))
        )

    def _fixpoint(self, fix: Fixpoint, xi: VariableAssignment) -> Dict[Tuple[Name, ...], ConfigSet]:
        """
        Kleene iteration, least fixpoints from below and greatest from above,
        over functions from argument tuples to sets of configurations.
        """
        closed = not self._free_recs(fix)
        if closed and (fix in self._fixpoints):
            return self._fixpoints[fix]
        keys = list(itertools.product(self._names, repeat=len(fix.params)))
        bodies = {b: subst_values(fix.body, dict(zip(fix.params, b))) for b in keys}
        start = frozenset() if isinstance(fix, Mu) else self.universe
        values = {b: start for b in keys}
        binding_support = self.protected(fix, xi)
        limit = len(self.universe) * len(keys) + 1
        for i in itertools.count():
            if i > limit:
                raise RuntimeError(f'fixpoint iteration did not stabilise after {limit} rounds, the body is not monotone: {fix}')
            self.iterations += 1
            env = {**xi, fix.rec: RecBinding(values, binding_support)}
            update = {b: self._eval(body, env) for b, body in bodies.items()}
            if update == values:
                break
            values = update
        if closed:
            self._fixpoints[fix] = values
        return values


# ========================================================================= #
# Operations                                                                #
# ========================================================================= #


def evaluate(phi: Formula, xi: Optional[VariableAssignment], pool: NamePool, fra: Fra, bound: Optional[int] = None) -> ConfigSet:
    """
    The configurations of `fra` over `pool` that satisfy `phi` under `xi`.
    """
    return Evaluator(fra, pool, bound=bound).evaluate(phi, xi)


def oracle_verdict(fra: Fra, phi0: Formula, config: Config, pool: Optional[NamePool] = None) -> bool:
    """
    Whether the start configuration satisfies the closed, firm and
    negation-free `phi0`, decided by bounded evaluation over the default pool
    on the configurations reachable from the trimmed start configuration.
    """
    check_config_against_model(config, fra)
    n = grade(phi0, fra)
    pool = default_pool(fra, phi0, config) if (pool is None) else frozenset(pool)
    check_in_pool(pool, config.history, what='history names')
    root = Config(config.state, config.regs, well_bound(config.history, config.automaton_state, phi0, n))
    with Timer() as t:
        evaluator = Evaluator(fra, pool, bound=n, roots=[root])
        verdict = root in evaluator.evaluate(phi0)
    log.debug(f'oracle: {evaluator} decided {verdict} after {evaluator.iterations} fixpoint rounds and {evaluator.rounds} passes in {t.pretty}')
    return verdict


def check_self_duality(phi: Formula, pool: NamePool, fra: Fra) -> bool:
    """
    Compare the negated fresh quantifier with the fresh quantifier over the
    negated body, on every configuration with a pool name fresh for both.
    """
    if not isinstance(phi, Fresh):
        raise ValueError(f'formula must start with a fresh quantifier, got: {phi}')
    evaluator = Evaluator(fra, pool)
    negated = evaluator.evaluate(Not(phi))
    inside = evaluator.evaluate(Fresh(phi.var, Not(phi.body)))
    protected = support(phi)
    room = frozenset(c for c in evaluator.universe if (evaluator.pool - protected - c.history))
    agree = (negated & room) == (inside & room)
    if not agree:
        log.warning(f'fresh quantifier is not self dual on the pool for: {phi}')
    return agree


# ========================================================================= #
# END                                                                       #
# ========================================================================= #
