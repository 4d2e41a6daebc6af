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
from nomcheck.fra import Fra
from nomcheck.registry import LazyImport
from nomcheck.registry import LazyValue
from nomcheck.registry import MODELS_DIR
from nomcheck.registry import RegexRegistry
from nomcheck.registry import Registry
from nomcheck.solver import brute_force_solve
from nomcheck.solver import solve


# ========================================================================= #
# TESTS                                                                     #
# ========================================================================= #


COUNTS = {
    'MODELS': 4,
    'SOLVERS': 2,
}


@pytest.mark.parametrize('registry_key', COUNTS.keys())
def test_registry_loading(registry_key):
    registry = getattr(R, registry_key)
    count = 0
    for example in registry:
        assert registry[example] is not None
        count += 1
    assert count == COUNTS[registry_key], f'invalid count for: {registry_key}'


def test_registry_values():
    assert R.SOLVERS['zielonka'] is solve
    assert R.SOLVERS['brute_force'] is brute_force_solve
    assert isinstance(R.MODELS['fra1'], Fra)
    # lazy values are cached
    assert R.MODELS['sessions'] is R.MODELS['sessions']


def test_models_from_path():
    path = str(MODELS_DIR.joinpath('fra2.fra'))
    assert R.MODELS.can_construct(path)
    assert not R.MODELS.can_construct('fra2')
    assert R.MODELS[path] == R.MODELS['fra2']
    assert R.MODELS.examples == ['fra1', 'fra2', 'fra3', 'sessions', 'path/to/model.fra']
    with pytest.raises(KeyError, match='cannot construct'):
        _ = R.MODELS['missing']


def test_registry_immutable():
    with pytest.raises(RuntimeError, match='overwrite'):
        R.SOLVERS['zielonka'] = LazyValue(lambda: solve)
    with pytest.raises(RuntimeError, match='deletion'):
        del R.MODELS['fra1']
    with pytest.raises(KeyError, match='no entry'):
        _ = R.SOLVERS['strategy_iteration']


def test_registry_errors():
    with pytest.raises(ValueError, match='identifiers'):
        Registry('not a name')
    registry = Registry('TEST')
    with pytest.raises(ValueError, match='identifiers'):
        registry['a.b'] = LazyValue(lambda: 1)
    with pytest.raises(TypeError, match='instances of'):
        registry['a'] = 1
    with pytest.raises(TypeError, match='non-empty'):
        registry[()] = LazyValue(lambda: 1)
    regex = RegexRegistry('TEST')
    with pytest.raises(ValueError, match='at least one group'):
        regex.register_regex(r'^.+$', example='x', factory_fn=str)
    with pytest.raises(ValueError, match='could not match example'):
        regex.register_regex(r'^(.+)\.fra$', example='x', factory_fn=str)


def test_registry_aliases():
    registry = Registry('TEST')
    registry['a', 'b'] = LazyValue(lambda: 1)
    assert registry['a'] == registry['b'] == 1
    assert len(registry) == 2
    assert set(registry) == {'a', 'b'}
    assert 'c' not in registry


def test_lazy_values():
    calls = []
    value = LazyValue(lambda: calls.append(1) or len(calls))
    assert value.get() == 1
    assert value.get() == 1
    value.clear()
    assert value.get() == 2
    assert LazyImport('nomcheck.solver.solve').get() is solve
    with pytest.raises(ImportError):
        LazyImport('nomcheck.missing_module.solve').get()


# ========================================================================= #
# END                                                                       #
# ========================================================================= #
