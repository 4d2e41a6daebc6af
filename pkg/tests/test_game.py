#  ~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~
#  MIT License
#
#  Copyright (c) 2022 The nomcheck Authors
#
#  Distributed under the terms of the MIT License,
#  see LICENSE.txt in the project root for the full license text.
#  ~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~

from itertools import combinations

import pytest

import nomcheck.registry as R
from nomcheck.fra import RegisterAssignment
from nomcheck.fra import make_config
from nomcheck.game import FormulaModelError
from nomcheck.game import GameBuilder
from nomcheck.game import GameSizeError
from nomcheck.game import ParityGame
from nomcheck.game import Player
from nomcheck.game import build_orbit_game
from nomcheck.game import check_config_against_model
from nomcheck.game import dump_game
from nomcheck.game import grade
from nomcheck.game import match_formulas
from nomcheck.game import nominal_equiv_positions
from nomcheck.game import nominal_potential
from nomcheck.game import orbit_size_bound
from nomcheck.game import owner_of
from nomcheck.game import well_bound
from nomcheck.logic import And
from nomcheck.logic import Diamond
from nomcheck.logic import Eq
from nomcheck.logic import Fresh
from nomcheck.logic import Label
from nomcheck.logic import Neq
from nomcheck.logic import Not
from nomcheck.logic import Nu
from nomcheck.logic import Or
from nomcheck.logic import ValueVar
from nomcheck.logic import Var
from nomcheck.logic import bounding_depth
from nomcheck.nominal import Name
from nomcheck.nominal import apply
from nomcheck.nominal import names
from nomcheck.nominal import orbit_key
from nomcheck.nominal import support
from nomcheck.nominal import swap
from nomcheck.pipeline import prepare_formula
from nomcheck.sampling import random_setup
from nomcheck.solver import winner
from nomcheck.util.seeds import make_rng
from tests.util import PSI_NOT_ALL
from tests.util import PSI_PATH
from tests.util import PSI_SUT
from tests.util import formula


a0, a1, a2, a3, a4 = names(0, 1, 2, 3, 4)


def _small_setup(seed):
    fra, phi, config = random_setup(seed, max_registers=1, size=8, binders=1, fixpoints=1)
    return fra, prepare_formula(phi, fra), config


# ========================================================================= #
# Bounds                                                                    #
# ========================================================================= #


def test_grade():
    fra1, fra2, sessions = R.MODELS['fra1'], R.MODELS['fra2'], R.MODELS['sessions']
    assert grade(formula(PSI_PATH), fra1) == 1
    assert grade(formula(PSI_NOT_ALL), fra2) == 3
    assert grade(formula(PSI_SUT), sessions) == 2
    assert grade(formula('#0 = #0'), fra1) == 1
    assert grade(formula('#3 != #3'), fra2) == 2
    assert nominal_potential(formula(PSI_NOT_ALL)) == 2
    assert grade(formula('[o:#0] #0 = #0'), fra1) == 1
    assert grade(formula('(#2 = #2) | <o:#0> #0 = #0'), fra1) == 2


def test_grade_rejects():
    fra1 = R.MODELS['fra1']
    with pytest.raises(ValueError, match='not firm'):
        grade(Eq(ValueVar('x'), a0), fra1)
    with pytest.raises(ValueError, match='not closed'):
        grade(Var('X'), fra1)
    with pytest.raises(ValueError, match='negations'):
        grade(Not(Eq(a0, a1)), fra1)


def test_orbit_size_bound():
    assert orbit_size_bound(R.MODELS['fra1'], formula(PSI_PATH)) == 1 * 5 * 1 * 2**2 * 2
    assert orbit_size_bound(R.MODELS['fra2'], formula(PSI_NOT_ALL)) == 2 * 14 * 2 * 4**3 * 2
    assert orbit_size_bound(R.MODELS['fra1'], formula(PSI_PATH), eps_factor=1) == 20


def test_well_bound():
    state = ('q0', RegisterAssignment())
    history = frozenset(names(0, 1, 2, 3, 4))
    assert well_bound(history, state, frozenset({a2}), 2) == {a0, a1, a2}
    assert well_bound(history, state, Eq(a4, a3), 2) == {a0, a3, a4}
    # short histories are kept
    assert well_bound(frozenset({a3, a4}), state, frozenset(), 2) == {a3, a4}
    # registers are kept
    state = ('q1', RegisterAssignment({1: a4}))
    assert well_bound(history, state, frozenset(), 1) == {a0, a4}
    with pytest.raises(RuntimeError, match='cannot be trimmed'):
        well_bound(history, state, frozenset({a1, a2}), 1)


# ========================================================================= #
# Positions                                                                 #
# ========================================================================= #


@pytest.mark.parametrize(['phi', 'player'], [
    (Eq(a0, a0), Player.ATTACKER),
    (Eq(a0, a1), Player.DEFENDER),
    (Neq(a0, a0), Player.DEFENDER),
    (Neq(a0, a1), Player.ATTACKER),
    (Or(Eq(a0, a0), Eq(a0, a1)), Player.DEFENDER),
    (And(Eq(a0, a0), Eq(a0, a1)), Player.ATTACKER),
    (Diamond(Label('o', (a0,)), Eq(a0, a0)), Player.DEFENDER),
    (Fresh('x', Eq(ValueVar('x'), a0)), Player.DEFENDER),
    (Nu('X', (), Var('X')), Player.DEFENDER),
])
def test_owner_of(phi, player):
    assert owner_of(phi) is player


def test_owner_of_rejects():
    with pytest.raises(RuntimeError, match='closed'):
        owner_of(Var('X'))
    with pytest.raises(RuntimeError, match='negation free'):
        owner_of(Not(Eq(a0, a0)))


def test_match_formulas():
    f1 = Diamond(Label('o', (a0,)), Eq(a0, a1))
    f2 = Diamond(Label('o', (a3,)), Eq(a3, a4))
    assert dict(match_formulas(f1, f2).items()) == {a0: a3, a1: a4}
    assert match_formulas(f1, Diamond(Label('o', (a3,)), Eq(a4, a4))) is None
    assert match_formulas(f1, Diamond(Label('p', (a3,)), Eq(a3, a4))) is None
    assert match_formulas(f1, Diamond(Label('o', (a3,)), Neq(a3, a4))) is None


# ========================================================================= #
# Orbit Game                                                                #
# ========================================================================= #


def test_build_path_game():
    fra = R.MODELS['fra1']
    game = build_orbit_game(fra, formula(PSI_PATH), make_config('q0'))
    # a single infinite play through the unfolding with ever larger histories, trimmed to two names
    assert len(game) == 9
    assert game.num_edges == 9
    assert game.grade == 1
    assert game.bound == 40
    assert all(game.owner(v) is Player.DEFENDER for v in game.positions)
    assert winner(game) is Player.DEFENDER
    assert all(len(v.history) <= game.grade + 1 for v in game.positions)


def test_dump_game():
    game = build_orbit_game(R.MODELS['fra1'], formula(PSI_PATH), make_config('q0'))
    lines = dump_game(game).splitlines()
    assert lines[0] == '0 ; 1 ; 0'
    assert lines[1] == '0 ; D ; 0 ; 1'
    assert len(lines) == 1 + len(game)
    described = dump_game(game, describe=True).splitlines()
    assert len(described) == 1 + 2 * len(game)
    assert described[2].startswith('# (q0, [], {}, nu X.')


def test_dump_game_dead_ends():
    game = ParityGame({0: Player.DEFENDER, 1: Player.ATTACKER}, {0: 0, 1: 3}, {0: [1]}, root=None)
    assert dump_game(game) == '- ; 0 ; 3\n0 ; D ; 0 ; 1\n1 ; A ; 3 ;\n'


def test_game_size_ceiling():
    with pytest.raises(GameSizeError, match='ceiling'):
        build_orbit_game(R.MODELS['fra1'], formula(PSI_PATH), make_config('q0'), max_positions=3)


def test_build_rejects():
    sessions = R.MODELS['sessions']
    with pytest.raises(FormulaModelError, match='unknown tag'):
        build_orbit_game(sessions, formula(PSI_PATH), make_config('q0'))
    with pytest.raises(KeyError):
        check_config_against_model(make_config('q9'), sessions)
    with pytest.raises(ValueError, match='available registers'):
        build_orbit_game(sessions, formula(PSI_SUT), make_config('q1'))


@pytest.mark.parametrize(['model', 'text', 'regs'], [
    ('fra1', PSI_PATH, None),
    ('fra2', PSI_NOT_ALL, None),
    ('fra3', PSI_NOT_ALL, {1: Name(0)}),
    ('sessions', PSI_SUT, None),
])
def test_positions_are_orbit_keys(model, text, regs):
    fra = R.MODELS[model]
    state = 'q0' if (regs is None) else 'q1'
    game = build_orbit_game(fra, formula(text, fra), make_config(state, regs))
    assert len(game) <= game.bound
    for v in game.positions:
        assert orbit_key(v) == v
        assert v.regs.range <= v.history
        assert len(v.history) <= game.grade + 1
    # no two keys lie in the same orbit
    for p, q in combinations(game.positions, 2):
        assert nominal_equiv_positions(p, q) is None


@pytest.mark.parametrize(['model', 'text', 'regs'], [
    ('fra2', PSI_NOT_ALL, None),
    ('fra3', PSI_NOT_ALL, {1: Name(0)}),
    ('sessions', PSI_SUT, None),
])
def test_closure_triples(model, text, regs):
    fra = R.MODELS[model]
    state = 'q0' if (regs is None) else 'q1'
    phi0 = formula(text, fra)
    game = GameBuilder(GameBuilder.cfg(track_triples=True)).build(fra, phi0, make_config(state, regs))
    for v in game.positions:
        assert v.triple is not None
        assert v.triple.expand() == v.formula
        assert len(support(v.triple)) <= len(support(phi0)) + bounding_depth(phi0)


@pytest.mark.parametrize('seed', range(30))
def test_closure_triples_random(seed):
    fra, phi0, config = _small_setup(seed)
    game = GameBuilder(GameBuilder.cfg(track_triples=True)).build(fra, phi0, config)
    for v in game.positions:
        assert v.triple.expand() == v.formula
        assert len(support(v.triple)) <= len(support(phi0)) + bounding_depth(phi0)


@pytest.mark.parametrize('seed', range(25))
def test_nominal_equiv_positions(seed):
    fra, phi0, config = _small_setup(seed)
    game = build_orbit_game(fra, phi0, config)
    rng = make_rng(seed)
    for v in game.positions[:20]:
        p = swap(Name(int(rng.integers(3))), Name(7))
        moved = apply(p, v)
        perm = nominal_equiv_positions(v, moved)
        assert perm is not None
        assert apply(perm, v) == moved
        assert orbit_key(moved) == v


@pytest.mark.parametrize('seed', range(100))
def test_orbit_game_equivariant(seed):
    fra, phi0, config = _small_setup(seed)
    rng = make_rng(seed)
    p = swap(Name(int(rng.integers(3))), Name(int(rng.integers(3, 6))))
    game = build_orbit_game(fra, phi0, config)
    moved = build_orbit_game(fra, apply(p, phi0), apply(p, config))
    assert set(game.positions) == set(moved.positions)
    assert game.root == moved.root
    assert winner(game) is winner(moved)
    assert len(game) <= game.bound


# ========================================================================= #
# END                                                                       #
# ========================================================================= #
