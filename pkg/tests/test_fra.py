#  ~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~
#  MIT License
#
#  Copyright (c) 2022 The nomcheck Authors
#
#  Distributed under the terms of the MIT License,
#  see LICENSE.txt in the project root for the full license text.
#  ~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~

import pytest

import nomcheck.registry as R
from nomcheck.fra import Config
from nomcheck.fra import EMPTY_REGISTERS
from nomcheck.fra import RegisterAssignment
from nomcheck.fra import make_config
from nomcheck.fra import match_states
from nomcheck.fra import permutation_oracle
from nomcheck.fra import register_index
from nomcheck.fra import representative_names
from nomcheck.fra import representative_successors
from nomcheck.fra import step
from nomcheck.fra import validate
from nomcheck.nominal import Name
from nomcheck.nominal import PartialInjection
from nomcheck.nominal import apply
from nomcheck.nominal import swap
from nomcheck.sampling import random_config
from nomcheck.sampling import random_fra
from nomcheck.util.seeds import make_rng
from tests.util import find_permutation


a0, a1, a2, a3, a4, a5 = (Name(i) for i in range(6))


# ========================================================================= #
# Configurations                                                            #
# ========================================================================= #


def test_register_assignment():
    regs = RegisterAssignment({2: a1, 1: a0})
    assert regs.pairs == ((1, a0), (2, a1))
    assert regs.domain == {1, 2}
    assert regs.range == {a0, a1}
    assert regs.get(2) == a1
    assert regs.get(3) is None
    assert regs.assign(2, a3) == RegisterAssignment({1: a0, 2: a3})
    assert regs.restrict({2}) == RegisterAssignment({2: a1})
    assert len(EMPTY_REGISTERS) == 0
    with pytest.raises(ValueError, match='injective'):
        RegisterAssignment({1: a0, 2: a0})
    with pytest.raises(TypeError):
        RegisterAssignment({1: 0})


def test_make_config():
    cfg = make_config('q1', {1: a0})
    assert cfg == Config('q1', RegisterAssignment({1: a0}), frozenset({a0}))
    assert make_config('q0').history == frozenset()
    assert make_config('q1', {1: a0}, [a0, a2]).history == {a0, a2}
    with pytest.raises(ValueError, match='outside of the history'):
        make_config('q1', {1: a0}, [a1])


def test_config_permute():
    cfg = make_config('q1', {1: a0}, [a0, a2])
    assert apply(swap(a0, a1), cfg) == make_config('q1', {1: a1}, [a1, a2])
    assert apply(swap(a3, a4), cfg) == cfg


# ========================================================================= #
# Automata                                                                  #
# ========================================================================= #


@pytest.mark.parametrize('name', ['fra1', 'fra2', 'fra3', 'sessions'])
def test_models_valid(name):
    fra = R.MODELS[name]
    assert validate(fra) == []
    assert register_index(fra) == (0 if name == 'fra1' else 1)


def test_outgoing():
    fra = R.MODELS['sessions']
    assert [t.tag for t in fra.outgoing('q0')] == ['S']
    assert sorted(t.tag for t in fra.outgoing('q1')) == ['T', 'U']
    assert fra.outgoing('missing') == ()


def test_without_transitions():
    fra = R.MODELS['sessions']
    fra_no_t = fra.without_transitions(lambda t: t.tag == 'T')
    assert len(fra.transitions) == 3
    assert len(fra_no_t.transitions) == 2
    assert all(t.tag != 'T' for t in fra_no_t.transitions)
    assert fra_no_t.tags == fra.tags
    assert validate(fra_no_t) == []


@pytest.mark.parametrize('seed', range(50))
def test_random_fra_valid(seed):
    fra = random_fra(seed)
    assert validate(fra) == []
    cfg = random_config(fra, seed)
    assert cfg.state in fra.avail
    assert cfg.regs.domain == fra.avail[cfg.state]


# ========================================================================= #
# Transition Relation                                                       #
# ========================================================================= #


def test_step_gfresh():
    fra = R.MODELS['fra1']
    cfg = make_config('q0', history=[a0])
    assert step(fra, cfg, 'o', a0) == frozenset()
    assert step(fra, cfg, 'o', a1) == {make_config('q0', history=[a0, a1])}
    assert step(fra, cfg, 'x', a1) == frozenset()


def test_step_lfresh():
    fra = R.MODELS['fra2']
    cfg = make_config('q1', {1: a0})
    # the register is overwritten, so only its current content is blocked
    assert step(fra, cfg, 'o', a0) == frozenset()
    assert step(fra, cfg, 'o', a1) == {make_config('q1', {1: a1}, [a0, a1])}
    cfg = make_config('q1', {1: a1}, [a0, a1])
    assert step(fra, cfg, 'o', a0) == {make_config('q1', {1: a0}, [a0, a1])}


def test_step_read():
    fra = R.MODELS['sessions']
    cfg = make_config('q1', {1: a0})
    assert step(fra, cfg, 'U', a0) == {cfg}
    assert step(fra, cfg, 'T', a0) == {make_config('q0', history=[a0])}
    assert step(fra, cfg, 'T', a1) == frozenset()
    assert step(fra, cfg, 'S', a1) == frozenset()


@pytest.mark.parametrize('seed', range(30))
def test_step_equivariant(seed):
    rng = make_rng(seed)
    fra = random_fra(rng)
    cfg = random_config(fra, rng)
    p = swap(Name(int(rng.integers(4))), Name(int(rng.integers(4))))
    for tag in fra.tags:
        for i in range(5):
            a = Name(i)
            expected = frozenset(apply(p, c) for c in step(fra, cfg, tag, a))
            assert step(fra, apply(p, cfg), tag, p(a)) == expected


def test_representative_names():
    cfg = make_config('q1', {1: a2}, [a0, a2])
    assert representative_names(cfg, frozenset()) == [a2, a0, a1]
    assert representative_names(cfg, frozenset({a5})) == [a2, a5, a0, a1]
    assert representative_names(make_config('q0'), frozenset()) == [a0]


def test_representative_successors():
    fra1 = R.MODELS['fra1']
    # one unseen name, read by the only transition
    assert representative_successors(fra1, make_config('q0'), frozenset()) == [
        (('o', a0), make_config('q0', history=[a0])),
    ]
    assert representative_successors(fra1, make_config('q0', history=[a0]), frozenset()) == [
        (('o', a1), make_config('q0', history=[a0, a1])),
    ]
    # locally fresh transitions may read a seen name or an unseen one
    fra2 = R.MODELS['fra2']
    moves = representative_successors(fra2, make_config('q0', history=[a0]), frozenset())
    assert moves == [
        (('o', a0), make_config('q1', {1: a0}, [a0])),
        (('o', a1), make_config('q1', {1: a1}, [a0, a1])),
    ]
    # protected names are kept apart
    moves = representative_successors(fra2, make_config('q0', history=[a0]), frozenset({a3}))
    assert [a for (_, a), _ in moves] == [a3, a0, a1]


@pytest.mark.parametrize('seed', range(30))
def test_representative_successors_are_steps(seed):
    rng = make_rng(seed)
    fra = random_fra(rng)
    cfg = random_config(fra, rng)
    for (tag, a), succ in representative_successors(fra, cfg, frozenset()):
        assert succ in step(fra, cfg, tag, a)


@pytest.mark.parametrize('seed', range(40))
def test_representative_successors_are_complete(seed):
    rng = make_rng(seed)
    fra = random_fra(rng)
    cfg = random_config(fra, rng, max_extra=2, num_names=4)
    pool = [Name(i) for i in range(5)]
    protected = frozenset(a for a in pool if rng.random() < 0.3)
    moves = representative_successors(fra, cfg, protected)
    # every successor over the pool is a representative one up to a permutation fixing `protected`
    for tag in fra.tags:
        for a in pool:
            for succ in step(fra, cfg, tag, a):
                assert any(
                    find_permutation((b, rep), (a, succ), fixed=protected) is not None
                    for (t, b), rep in moves if t == tag
                ), f'{cfg} --{tag}:{a}--> {succ} has no representative'


def _shuffle(rng, group) -> dict:
    group = sorted(group)
    return {a: group[int(i)] for a, i in zip(group, rng.permutation(len(group)))}


@pytest.mark.parametrize('seed', range(30))
def test_step_fresh_support(seed):
    rng = make_rng(seed)
    fra = random_fra(rng)
    cfg = random_config(fra, rng, max_extra=2, num_names=4)
    pool = frozenset(Name(i) for i in range(6))
    # fix the registers, shuffle the rest of the history and the unseen names separately
    p = PartialInjection({
        **_shuffle(rng, cfg.history - cfg.regs.range),
        **_shuffle(rng, pool - cfg.history),
    }).to_permutation()
    assert apply(p, cfg) == cfg
    moves = frozenset((tag, a, succ) for tag in fra.tags for a in pool for succ in step(fra, cfg, tag, a))
    assert apply(p, moves) == moves


# ========================================================================= #
# Permutation Oracle                                                        #
# ========================================================================= #


def test_permutation_oracle():
    s1 = ('q1', RegisterAssignment({1: a0}))
    s2 = ('q1', RegisterAssignment({1: a3}))
    p = permutation_oracle(s1, s2, (a1,), (a4,))
    assert p is not None
    assert (p(a0), p(a1)) == (a3, a4)
    assert apply(p, s1) == s2
    # inconsistent with the registers
    assert permutation_oracle(s1, s2, (a0,), (a4,)) is None
    # different states or register domains
    assert permutation_oracle(s1, ('q0', RegisterAssignment({1: a3})), (), ()) is None
    assert permutation_oracle(s1, ('q1', EMPTY_REGISTERS), (), ()) is None


def _random_state(rng):
    values = rng.permutation(4)
    regs = RegisterAssignment({r: Name(int(v)) for r, v in zip((1, 2), values) if rng.random() < 0.7})
    return f'q{int(rng.integers(2))}', regs


@pytest.mark.parametrize('seed', range(30))
def test_permutation_oracle_matches_search(seed):
    rng = make_rng(seed)
    for _ in range(20):
        s1 = _random_state(rng)
        a = tuple(Name(int(i)) for i in rng.integers(0, 4, size=int(rng.integers(3))))
        if rng.random() < 0.5:
            s2, b = _random_state(rng), tuple(Name(int(i)) for i in rng.integers(0, 4, size=len(a)))
        else:
            q = swap(Name(int(rng.integers(4))), Name(int(rng.integers(6))))
            s2, b = apply(q, s1), apply(q, a)
        p = permutation_oracle(s1, s2, a, b)
        assert (p is not None) == (find_permutation((s1, a), (s2, b)) is not None), f'{s1}, {a} and {s2}, {b}'
        if p is not None:
            assert apply(p, s1) == s2
            assert apply(p, a) == b


def test_match_states():
    s1 = ('q1', RegisterAssignment({1: a0, 2: a1}))
    s2 = ('q1', RegisterAssignment({1: a1, 2: a0}))
    inj = match_states(s1, s2, (), ())
    assert dict(inj.items()) == {a0: a1, a1: a0}
    assert match_states(s1, s2, (a0,), (a0,)) is None


# ========================================================================= #
# END                                                                       #
# ========================================================================= #
