#  ~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~
#  MIT License
#
#  Copyright (c) 2022 The nomcheck Authors
#
#  Distributed under the terms of the MIT License,
#  see LICENSE.txt in the project root for the full license text.
#  ~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~

"""
Named solvers and example automata, all values are loaded lazily.

Models can also be loaded from a path, any key ending in `.fra` is
read as a file: `MODELS['path/to/model.fra']`
"""

from pathlib import Path

from nomcheck.registry._registry import LazyValue
from nomcheck.registry._registry import LazyImport
from nomcheck.registry._registry import Registry
from nomcheck.registry._registry import RegexRegistry


# ========================================================================= #
# SOLVERS - should be synchronized with: `nomcheck/solver/__init__.py`      #
# ========================================================================= #


SOLVERS: Registry['Callable[[nomcheck.game.ParityGame], nomcheck.solver.WinningRegions]'] = Registry('SOLVERS')
SOLVERS['zielonka']    = LazyImport('nomcheck.solver._zielonka.solve')
SOLVERS['brute_force'] = LazyImport('nomcheck.solver._brute.brute_force_solve')


# ========================================================================= #
# MODELS - the example automata in `nomcheck/models`                        #
# ========================================================================= #


MODELS_DIR = Path(__file__).parent.parent.joinpath('models')


def _load_model(path: str):
    from nomcheck.frontend import load_fra
    return load_fra(path)


def _model(name: str) -> LazyValue:
    return LazyValue(lambda: _load_model(str(MODELS_DIR.joinpath(f'{name}.fra'))))


MODELS: RegexRegistry['nomcheck.fra.Fra'] = RegexRegistry('MODELS')
MODELS['fra1']     = _model('fra1')
MODELS['fra2']     = _model('fra2')
MODELS['fra3']     = _model('fra3')
MODELS['sessions'] = _model('sessions')
# any other model is read from disk
MODELS.register_regex(r'^(.+\.fra)$', example='path/to/model.fra', factory_fn=_load_model)


# ========================================================================= #
# END                                                                       #
# ========================================================================= #
