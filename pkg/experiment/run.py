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
from itertools import combinations
from typing import Callable
from typing import Dict
from typing import Optional

from omegaconf import DictConfig
from omegaconf import OmegaConf
from tqdm import tqdm

import nomcheck.registry as R
from nomcheck.fra import Config
from nomcheck.fra import Fra
from nomcheck.fra import make_config
from nomcheck.frontend import parse_formula
from nomcheck.frontend import parse_names
from nomcheck.frontend import parse_registers
from nomcheck.game import dump_game
from nomcheck.game import grade
from nomcheck.game import nominal_equiv_positions
from nomcheck.game import nominal_potential
from nomcheck.logic import alternation_depth
from nomcheck.logic import count_negations
from nomcheck.logic import fixpoint_adepths
from nomcheck.logic import format_formula
from nomcheck.logic import negation_free
from nomcheck.logic import size
from nomcheck.pipeline import CheckResult
from nomcheck.pipeline import ModelChecker
from nomcheck.pipeline import prepare_formula
from nomcheck.sampling import random_setup
from nomcheck.util.profiling import Timer
from nomcheck.util.seeds import make_rng
from nomcheck.util.strings.fmt import fmt_table
from nomcheck.util.strings.fmt import fmt_verdict
from nomcheck.util.strings.fmt import make_box_str

from experiment.util.hydra_main import hydra_main
from experiment.util.run_utils import EXIT_ERROR
from experiment.util.run_utils import EXIT_SAT
from experiment.util.run_utils import EXIT_UNSAT


log = logging.getLogger(__name__)


# ========================================================================= #
# HYDRA CONFIG HELPERS                                                      #
# ========================================================================= #


def hydra_get_model(cfg) -> Fra:
    model = cfg.check.model
    if not R.MODELS.can_construct(model) and (model not in R.MODELS):
        raise KeyError(f'`check.model={repr(model)}` is neither a registered model nor a `.fra` file, registered models are: {R.MODELS.examples}')
    return R.MODELS[model]


def hydra_get_config(cfg, fra: Fra) -> Config:
    state = cfg.check.state
    if state is None:
        state = fra.states[0]
        log.info(f'no start state given, using: {repr(state)}')
    if state not in fra.avail:
        raise KeyError(f'`check.state={repr(state)}` is not a state of the model, valid states are: {list(fra.states)}')
    regs = parse_registers(cfg.check.regs)
    history = parse_names(cfg.check.history) if (cfg.check.history is not None) else None
    return make_config(state, regs, history)


def hydra_get_checker(cfg, oracle: Optional[bool] = None) -> ModelChecker:
    return ModelChecker(ModelChecker.cfg(
        solver=cfg.settings.solver,
        max_positions=cfg.check.max_positions,
        oracle=cfg.check.oracle if (oracle is None) else oracle,
    ))


def hydra_print_config(cfg, *keys: str):
    log.info(f'Final Config For Action: {cfg.action}\n{make_box_str(OmegaConf.to_yaml({k: cfg[k] for k in keys}))}')


# ========================================================================= #
# ACTIONS                                                                   #
# ========================================================================= #


def action_check(cfg: DictConfig) -> int:
    hydra_print_config(cfg, 'check', 'settings')
    fra = hydra_get_model(cfg)
    phi = parse_formula(cfg.check.formula, fra.tags)
    config = hydra_get_config(cfg, fra)
    result: CheckResult = hydra_get_checker(cfg).check(fra, phi, config)
    # game dump
    if cfg.check.dump_game:
        with open(cfg.check.dump_game, 'w') as f:
            f.write(dump_game(result.game))
        log.info(f'wrote game with {len(result.game)} positions to: {repr(cfg.check.dump_game)}')
    # verdict on standard output
    if cfg.check.json:
        print(json.dumps(result.to_dict()))
    else:
        print(fmt_verdict(result.satisfied, color=False))
        log.info(f'{fmt_verdict(result.satisfied)} for {config} |= {result.formula}')
    if result.oracle_agrees is False:
        log.error('the oracle disagrees with the game verdict')
    return EXIT_SAT if result.satisfied else EXIT_UNSAT


def action_stats(cfg: DictConfig) -> int:
    fra = hydra_get_model(cfg)
    phi = parse_formula(cfg.check.formula, fra.tags)
    config = hydra_get_config(cfg, fra)
    phi0 = prepare_formula(phi, fra)
    result = hydra_get_checker(cfg, oracle=False).check(fra, phi, config)
    stats = result.stats
    rows = [
        ('size', size(phi)),
        ('negations', count_negations(phi)),
        ('size negation free', size(phi0)),
        ('alternation depth', alternation_depth(phi0)),
        ('nominal potential', nominal_potential(phi0)),
        ('grade', grade(phi0, fra)),
        ('positions', stats.positions),
        ('edges', stats.edges),
        ('max rank', stats.max_rank),
        ('bound', stats.bound),
        ('within bound', stats.within_bound),
        ('time', Timer.prettify_time(int(stats.millis * 1_000_000))),
    ]
    # pairwise orbit check, quadratic in the number of positions
    if cfg.stats.verify_orbits:
        with Timer() as t:
            duplicates = sum(nominal_equiv_positions(p, q) is not None for p, q in combinations(result.game.positions, 2))
        rows.append(('equivalent keys', duplicates))
        rows.append(('verify time', t.pretty))
    print(fmt_table(rows, color=False))
    return EXIT_SAT


def action_negfree(cfg: DictConfig) -> int:
    phi = parse_formula(cfg.check.formula)
    print(format_formula(negation_free(phi)))
    return EXIT_SAT


def action_adepth(cfg: DictConfig) -> int:
    phi = parse_formula(cfg.check.formula)
    depths = fixpoint_adepths(phi)
    print(alternation_depth(phi))
    if depths:
        log.info(f'alternation depth per binder:\n{fmt_table(depths.items())}')
    return EXIT_SAT


def action_crosscheck(cfg: DictConfig) -> int:
    s = cfg.crosscheck
    rng = make_rng(s.seed)
    checker = hydra_get_checker(cfg, oracle=True)
    disagreements, over_bound = [], 0
    for i in tqdm(range(s.samples), desc='crosscheck'):
        fra, phi, config = random_setup(
            rng,
            max_states=s.max_states,
            max_registers=s.max_registers,
            max_tags=s.max_tags,
            size=s.size,
            binders=s.binders,
            fixpoints=s.fixpoints,
            names=s.names,
            max_size=s.max_size,
        )
        result = checker.check(fra, phi, config)
        over_bound += not result.stats.within_bound
        if not result.oracle_agrees:
            disagreements.append((i, result.formula, config))
    for i, phi, config in disagreements:
        log.error(f'setup {i}: the oracle disagrees for {config} |= {phi}')
    log.info(f'{s.samples - len(disagreements)}/{s.samples} verdicts agree with the oracle, {over_bound} games exceed their bound')
    print(json.dumps({'samples': s.samples, 'disagreements': len(disagreements), 'over_bound': over_bound}))
    return EXIT_ERROR if (disagreements or over_bound) else EXIT_SAT


# available actions
ACTIONS: Dict[str, Callable[[DictConfig], int]] = {
    'check': action_check,
    'stats': action_stats,
    'negfree': action_negfree,
    'adepth': action_adepth,
    'crosscheck': action_crosscheck,
}


def run_action(cfg: DictConfig) -> int:
    action_key = cfg.action
    # get the action
    if action_key not in ACTIONS:
        raise KeyError(f'The given action: {repr(action_key)} is invalid, must be one of: {sorted(ACTIONS.keys())}')
    action = ACTIONS[action_key]
    # run the action
    return action(cfg)


# ========================================================================= #
# MAIN                                                                      #
# ========================================================================= #


# launch the action
if __name__ == '__main__':
    hydra_main(callback=run_action, config_name='config')


# ========================================================================= #
# END                                                                       #
# ========================================================================= #
