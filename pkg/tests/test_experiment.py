#  ~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~
#  MIT License
#
#  Copyright (c) 2022 The nomcheck Authors
#
#  Distributed under the terms of the MIT License,
#  see LICENSE.txt in the project root for the full license text.
#  ~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~

import json
import logging

import pytest

import experiment.run as experiment_run
from experiment.util.hydra_main import hydra_main
from experiment.util.run_utils import EXIT_ERROR
from experiment.util.run_utils import EXIT_SAT
from experiment.util.run_utils import EXIT_UNSAT
from nomcheck.registry import MODELS_DIR
from tests.util import PSI_NOT_ALL
from tests.util import PSI_SUT
from tests.util import temp_environ
from tests.util import temp_sys_args


# ========================================================================= #
# TESTS                                                                     #
# ========================================================================= #


def _run(*args) -> int:
    # show full errors in hydra
    with temp_environ(dict(HYDRA_FULL_ERROR='1')), temp_sys_args([experiment_run.__file__, *args]):
        # run the hydra experiment
        # 1. loads `experiment/config/config_test.yaml`
        # 2. enables the ${exit:<msg>} and ${abspath:<path>} resolvers
        # 3. exits with the code returned by the action if it is not zero
        return hydra_main(
            callback=experiment_run.run_action,
            config_name='config_test',
            log_level=logging.DEBUG,
        )


def _run_exit_code(*args) -> int:
    try:
        return _run(*args)
    except SystemExit as e:
        return e.code


@pytest.mark.parametrize('args', [
    ['run_action=check'],
    ['run_action=check', 'check.oracle=false', 'settings.solver=brute_force', "check.formula='<o:#0> #0 = #0'"],
    ['run_action=check', 'check.model=fra3', 'check.state=q1', "check.regs='1=#0'", "check.history='#0,#1'", f"check.formula='{PSI_NOT_ALL}'"],
    ['run_action=check', f"check.model='{MODELS_DIR.joinpath('sessions.fra')}'", f"check.formula='{PSI_SUT}'"],
    ['run_action=stats'],
    ['run_action=adepth'],
    ['run_action=crosscheck'],
])
def test_experiment_run(args):
    assert _run(*args) == EXIT_SAT


def test_experiment_check_unsat():
    code = _run_exit_code('run_action=check', 'check.model=fra2', f"check.formula='{PSI_NOT_ALL}'")
    assert code == EXIT_UNSAT


@pytest.mark.parametrize('args', [
    ['run_action=check', 'check.model=missing'],
    ['run_action=check', 'check.state=q9'],
    ['run_action=check', "check.formula='nu X. <o:#0'"],
    ['run_action=check', "check.formula='<p:#0> #0 = #0'"],
    ['run_action=check', "check.regs='1=#0'"],
    ['run_action=check', 'check.max_positions=2'],
])
def test_experiment_errors(args):
    assert _run_exit_code(*args) == EXIT_ERROR


def test_experiment_check_json(capsys):
    _run('run_action=check', 'check.json=true')
    result = json.loads(capsys.readouterr().out.strip().splitlines()[-1])
    assert result['verdict'] == 'SAT'
    assert result['grade'] == 1
    assert result['positions'] <= result['bound']
    assert result['oracle_agrees'] is True
    assert set(result) == {'verdict', 'positions', 'edges', 'max_rank', 'grade', 'bound', 'millis', 'oracle_agrees'}


def test_experiment_check_verdict(capsys):
    _run('run_action=check')
    assert capsys.readouterr().out.strip().splitlines()[-1] == 'SAT'


def test_experiment_dump_game(tmp_path):
    path = tmp_path / 'game.txt'
    _run('run_action=check', f"check.dump_game='{path}'")
    lines = path.read_text().splitlines()
    assert lines[0] == '0 ; 1 ; 0'
    assert len(lines) == 10


def test_experiment_negfree(capsys):
    _run('run_action=negfree', "check.formula='!(#0 = #1)'")
    assert capsys.readouterr().out.strip().splitlines()[-1] == '#0 != #1'


def test_experiment_adepth(capsys):
    _run('run_action=adepth', f"check.formula='{PSI_SUT}'")
    assert capsys.readouterr().out.strip().splitlines()[-1] == '2'


def test_experiment_crosscheck(capsys):
    _run('run_action=crosscheck', 'crosscheck.samples=3')
    result = json.loads(capsys.readouterr().out.strip().splitlines()[-1])
    assert result == {'samples': 3, 'disagreements': 0, 'over_bound': 0}


def test_experiment_invalid_action():
    assert _run_exit_code('action=train') == EXIT_ERROR


def test_hydra_main_no_exit():
    with temp_environ(dict(HYDRA_FULL_ERROR='1')), temp_sys_args([experiment_run.__file__, 'check.model=fra2', f"check.formula='{PSI_NOT_ALL}'"]):
        code = hydra_main(callback=experiment_run.run_action, config_name='config_test', log_level=logging.DEBUG, exit_on_code=False)
    assert code == EXIT_UNSAT


# ========================================================================= #
# END                                                                       #
# ========================================================================= #
