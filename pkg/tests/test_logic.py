#  ~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~
#  MIT License
#
#  Copyright (c) 2022 The nomcheck Authors
#
#  Distributed under the terms of the MIT License,
#  see LICENSE.txt in the project root for the full license text.
#  ~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~

import pytest

from nomcheck.frontend import parse_formula
from nomcheck.logic import BigOr
from nomcheck.logic import Box
from nomcheck.logic import CaptureError
from nomcheck.logic import Diamond
from nomcheck.logic import Eq
from nomcheck.logic import FormulaError
from nomcheck.logic import Fresh
from nomcheck.logic import Label
from nomcheck.logic import Mu
from nomcheck.logic import Neq
from nomcheck.logic import Not
from nomcheck.logic import Nu
from nomcheck.logic import Or
from nomcheck.logic import RecBlock
from nomcheck.logic import ValueVar
from nomcheck.logic import Var
from nomcheck.logic import adepth_of
from nomcheck.logic import alternation_depth
from nomcheck.logic import bounding_depth
from nomcheck.logic import count_negations
from nomcheck.logic import dependency_graph
from nomcheck.logic import fixpoint_adepths
from nomcheck.logic import fixpoint_ranks
from nomcheck.logic import free_rec_vars
from nomcheck.logic import free_value_vars
from nomcheck.logic import is_closed
from nomcheck.logic import is_firm
from nomcheck.logic import is_negation_free
from nomcheck.logic import is_normalized
from nomcheck.logic import negation_free
from nomcheck.logic import normalize_binders
from nomcheck.logic import rank
from nomcheck.logic import size
from nomcheck.logic import subformulas
from nomcheck.logic import subst_rec
from nomcheck.logic import subst_values
from nomcheck.logic import unfold
from nomcheck.logic import validate_formula
from nomcheck.logic import zeta
from nomcheck.nominal import Name
from nomcheck.nominal import apply
from nomcheck.nominal import compose
from nomcheck.nominal import support
from nomcheck.nominal import swap
from nomcheck.sampling import random_formula
from nomcheck.util.seeds import make_rng
from tests.util import PSI_NOT_ALL
from tests.util import PSI_PATH
from tests.util import PSI_SUT


# ========================================================================= #
# HELPER                                                                    #
# ========================================================================= #


x, y = ValueVar('x'), ValueVar('y')
a0, a1 = Name(0), Name(1)
o = lambda *args: Label('o', tuple(args))


# the complement of "no name is read twice", least fixpoints only
PHI_ALL = 'mu X. some x. <o:x> (X | mu Y. some y. <o:y> (Y | x = y))'


# ========================================================================= #
# TESTS: MEASURES                                                           #
# ========================================================================= #


@pytest.mark.parametrize(('text', 'expected_size', 'expected_depth'), [
    ('#0 = #1', 2, 0),
    ('!(#0 = #1)', 3, 0),
    (PSI_PATH, 5, 1),
    (PSI_SUT, 12, 1),
    (PSI_NOT_ALL, 14, 2),
    ('mu X(y). (<o:y> X(y))(#0)', 7, 1),
])
def test_size_and_bounding_depth(text, expected_size, expected_depth):
    phi = parse_formula(text)
    assert size(phi) == expected_size
    assert bounding_depth(phi) == expected_depth


def test_free_variables():
    phi = Or(Eq(x, a0), BigOr('y', Neq(y, x)))
    assert free_value_vars(phi) == {'x'}
    assert zeta(phi) == 1
    assert not is_firm(phi)
    psi = Mu('X', (), Or(Var('X'), Var('Z')))
    assert free_rec_vars(psi) == {'Z'}
    assert not is_closed(psi)
    assert is_closed(parse_formula(PSI_SUT))
    assert is_firm(parse_formula(PSI_SUT))


def test_count_negations():
    phi = parse_formula('!(!(#0 = #1) & !#1 = #2)')
    assert count_negations(phi) == 3
    assert not is_negation_free(phi)


# ========================================================================= #
# TESTS: BINDERS                                                            #
# ========================================================================= #


def test_normalize_binders_recursion():
    phi = Or(Mu('X', (), Diamond(o(a0), Var('X'))), Mu('X', (), Diamond(o(a1), Var('X'))))
    result = normalize_binders(phi)
    assert result == Or(Mu('X', (), Diamond(o(a0), Var('X'))), Mu('X1', (), Diamond(o(a1), Var('X1'))))
    assert is_normalized(result)
    assert not is_normalized(phi)
    # already normalized formulas are unchanged
    assert normalize_binders(result) == result


def test_normalize_binders_values():
    phi = BigOr('x', BigOr('x', Eq(x, a0)))
    assert normalize_binders(phi) == BigOr('x', BigOr('x1', Eq(ValueVar('x1'), a0)))


def test_normalize_binders_avoids_free_variables():
    phi = Or(Var('X'), Mu('X', (), Var('X')))
    assert normalize_binders(phi) == Or(Var('X'), Mu('X1', (), Var('X1')))


# ========================================================================= #
# TESTS: SUBSTITUTION                                                       #
# ========================================================================= #


def test_subst_values():
    phi = Or(Eq(x, y), BigOr('x', Diamond(o(x), Eq(x, y))))
    assert subst_values(phi, {'x': a0, 'y': a1}) == Or(Eq(a0, a1), BigOr('x', Diamond(o(x), Eq(x, a1))))


def test_unfold():
    phi = parse_formula(PSI_PATH)
    assert unfold(phi) == Fresh('x', Diamond(o(x), phi))
    psi = Mu('X', ('y',), Diamond(o(y), Var('X', (y,))), (a0,))
    assert unfold(psi) == Diamond(o(a0), psi)
    with pytest.raises(TypeError):
        unfold(Eq(a0, a1))
    with pytest.raises(ValueError):
        unfold(Mu('X', ('y',), Var('X', (y,)), (x,)))


def test_subst_rec_closes_formula():
    inner = Mu('Y', (), Or(Var('Y'), Var('X')))
    outer = Nu('X', (), Diamond(o(a0), inner))
    result = subst_rec(inner, (RecBlock('X', outer),))
    assert is_closed(result)
    assert result == Mu('Y', (), Or(Var('Y'), outer))


def test_subst_rec_capture():
    definition = Mu('X', (), Eq(x, a0))
    with pytest.raises(CaptureError):
        subst_rec(BigOr('x', Var('X')), (RecBlock('X', definition),))


def _random_swaps(rng, n: int = 4):
    first = swap(Name(int(rng.integers(n))), Name(int(rng.integers(n))))
    second = swap(Name(int(rng.integers(n))), Name(int(rng.integers(n))))
    return compose(first, second)


@pytest.mark.parametrize('seed', range(50))
def test_subst_values_equivariant(seed):
    rng = make_rng(seed)
    fresh = random_formula(rng, size=10, binders=2, fixpoints=1, names=2, fresh_root=True)
    body, var = fresh.body, fresh.var
    a, p = Name(int(rng.integers(4))), _random_swaps(rng)
    assert apply(p, subst_values(body, {var: a})) == subst_values(apply(p, body), {var: p(a)})


@pytest.mark.parametrize('seed', range(50))
def test_subst_rec_equivariant(seed):
    rng = make_rng(seed)
    phi = normalize_binders(random_formula(rng, size=12, binders=2, fixpoints=2, names=2))
    p = _random_swaps(rng)
    for fix in subformulas(phi):
        if isinstance(fix, (Mu, Nu)):
            th = (RecBlock(fix.rec, fix),)
            assert apply(p, subst_rec(fix.body, th)) == subst_rec(apply(p, fix.body), apply(p, th))


# ========================================================================= #
# TESTS: NEGATIONS                                                          #
# ========================================================================= #


@pytest.mark.parametrize(('text', 'expected'), [
    ('!(#0 = #1)', Neq(a0, a1)),
    ('!!(#0 = #1)', Eq(a0, a1)),
    ('!(mu X. <o:#0> X)', Nu('X', (), Box(o(a0), Var('X')))),
    ('!(fresh x. <o:x> #0 = #0)', Fresh('x', Box(o(x), Neq(a0, a0)))),
])
def test_negation_free(text, expected):
    assert negation_free(parse_formula(text)) == expected


def test_negation_free_rejects():
    with pytest.raises(FormulaError):
        negation_free(Mu('X', (), Not(Var('X'))))
    with pytest.raises(ValueError):
        negation_free(Not(Eq(x, a0)))


@pytest.mark.parametrize('seed', range(500))
def test_negation_free_size(seed):
    phi = random_formula(make_rng(seed), size=12, negations=True)
    result = negation_free(phi)
    assert is_negation_free(result)
    assert size(result) <= size(phi) - count_negations(phi)
    assert negation_free(result) == result


@pytest.mark.parametrize('seed', range(500))
def test_size_bound(seed):
    phi = normalize_binders(random_formula(make_rng(seed), size=14, binders=3, arity=2, names=2))
    assert is_firm(phi) and is_negation_free(phi)
    assert len(support(phi)) + 2 * bounding_depth(phi) + zeta(phi) <= size(phi)


# ========================================================================= #
# TESTS: ALTERNATION                                                        #
# ========================================================================= #


def test_alternation_depth_sessions():
    phi = parse_formula(PSI_SUT)
    assert fixpoint_adepths(phi) == {'X': 2, 'Y': 1}
    assert adepth_of(phi, 'X') == 2
    assert alternation_depth(phi) == 2
    ranks = fixpoint_ranks(phi)
    assert ranks == {'X': 2, 'Y': 1}
    assert rank(phi, ranks) == 2
    assert rank(Eq(a0, a1), ranks) == 0
    assert set(dependency_graph(phi).edges) == {('X', 'Y')}


@pytest.mark.parametrize(('text', 'expected'), [
    ('#0 = #1', 0),
    (PSI_PATH, 1),
    (PHI_ALL, 1),
    (PSI_NOT_ALL, 1),
    ('mu X. nu Y. mu Z. (<o:#0> X | <o:#0> Y | <o:#0> Z)', 3),
])
def test_alternation_depth(text, expected):
    assert alternation_depth(parse_formula(text)) == expected


@pytest.mark.parametrize('seed', range(100))
def test_rank_parity(seed):
    phi = normalize_binders(random_formula(make_rng(seed), size=16, binders=1, fixpoints=3))
    ranks = fixpoint_ranks(phi)
    depth = alternation_depth(phi)
    for psi in subformulas(phi):
        r = rank(psi, ranks)
        # odd ranks only for least fixpoints
        assert (r % 2 == 1) == isinstance(psi, Mu)
        assert r <= depth + 1
        if not isinstance(psi, (Mu, Nu)):
            assert r == 0


def test_alternation_requires_unique_binders():
    phi = Or(Mu('X', (), Var('X')), Mu('X', (), Var('X')))
    with pytest.raises(ValueError):
        dependency_graph(phi)
    with pytest.raises(KeyError):
        adepth_of(parse_formula(PSI_PATH), 'Y')


# ========================================================================= #
# TESTS: VALIDATION                                                         #
# ========================================================================= #


def test_validate_formula():
    phi = parse_formula(PSI_SUT)
    assert validate_formula(phi, {'S': 1, 'T': 1, 'U': 1}) is phi
    with pytest.raises(FormulaError):
        validate_formula(phi, {'S': 1, 'T': 1})
    with pytest.raises(FormulaError):
        validate_formula(phi, {'S': 2, 'T': 1, 'U': 1})
    with pytest.raises(FormulaError):
        validate_formula(Mu('X', ('y',), Var('X', ()), (a0,)))
    with pytest.raises(FormulaError):
        validate_formula(Mu('X', ('y', 'y'), Var('X', (a0, a0)), (a0, a0)))
    with pytest.raises(FormulaError):
        validate_formula(Mu('X', (), Not(Var('X'))))


# ========================================================================= #
# END                                                                       #
# ========================================================================= #
