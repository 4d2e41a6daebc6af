#  ~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~
#  MIT License
#
#  Copyright (c) 2022 The nomcheck Authors
#
#  Distributed under the terms of the MIT License,
#  see LICENSE.txt in the project root for the full license text.
#  ~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~

"""
The model checking pipeline: a formula is validated, its binders are
renamed apart and negations are pushed to the atoms, then the orbit
game is built, solved and the verdict read off at the root.
"""

import logging
from dataclasses import asdict
from dataclasses import dataclass
from pprint import pformat
from typing import Optional

from nomcheck.fra import Config
from nomcheck.fra import Fra
from nomcheck.game import GameBuilder
from nomcheck.game import GameStats
from nomcheck.game import ParityGame
from nomcheck.game import Player
from nomcheck.logic import Formula
from nomcheck.logic import free_rec_vars
from nomcheck.logic import free_value_vars
from nomcheck.logic import negation_free
from nomcheck.logic import normalize_binders
from nomcheck.logic import validate_formula
from nomcheck.solver import WinningRegions
from nomcheck.util.profiling import Timer


log = logging.getLogger(__name__)


# ========================================================================= #
# Formulas                                                                  #
# ========================================================================= #


def prepare_formula(phi: Formula, fra: Optional[Fra] = None) -> Formula:
    """
    Validate `phi` (against the tags of `fra` if given) and bring it into
    the form games are built from: closed, firm, normalized and negation free.
    """
    validate_formula(phi, None if (fra is None) else fra.tags)
    if free_rec_vars(phi):
        raise ValueError(f'formula has free recursion variables: {sorted(free_rec_vars(phi))}')
    if free_value_vars(phi):
        raise ValueError(f'formula has free value variables: {sorted(free_value_vars(phi))}')
    return negation_free(normalize_binders(phi))


# ========================================================================= #
# Results                                                                   #
# ========================================================================= #


@dataclass(frozen=True)
class CheckResult(object):
    satisfied: bool
    formula: Formula
    stats: GameStats
    game: ParityGame
    regions: WinningRegions
    oracle_agrees: Optional[bool] = None

    @property
    def verdict(self) -> str:
        return 'SAT' if self.satisfied else 'UNSAT'

    def to_dict(self) -> dict:
        result = {'verdict': self.verdict, **self.stats.to_dict()}
        if self.oracle_agrees is not None:
            result['oracle_agrees'] = self.oracle_agrees
        return result


# ========================================================================= #
# Model Checker                                                             #
# ========================================================================= #


class ModelChecker(object):
    """
    Decide whether a configuration of an automaton satisfies a formula.
    """

    @dataclass
    class cfg(object):
        # name of the solver in `nomcheck.registry.SOLVERS`
        solver: str = 'zielonka'
        # abort game construction past this many positions, `None` to disable
        max_positions: Optional[int] = 1_000_000
        # cross-check the verdict with the oracle
        oracle: bool = False

        def get_keys(self) -> list:
            return list(self.to_dict().keys())

        def to_dict(self) -> dict:
            return asdict(self)

        def __str__(self):
            return pformat(self.to_dict(), sort_dicts=False)

    def __init__(self, cfg: cfg = None):
        if cfg is None:
            cfg = self.__class__.cfg()
        assert isinstance(cfg, self.__class__.cfg), f'{cfg=} ({type(cfg)}) is not an instance of {self.__class__.cfg}'
        self.cfg = cfg

    def check(self, fra: Fra, phi: Formula, config: Config) -> CheckResult:
        from nomcheck.registry import SOLVERS
        solve_fn = SOLVERS[self.cfg.solver]
        phi0 = prepare_formula(phi, fra)
        with Timer() as t:
            game = GameBuilder(GameBuilder.cfg(max_positions=self.cfg.max_positions)).build(fra, phi0, config)
            regions = solve_fn(game)
        satisfied = regions.winner_at(game.root) is Player.DEFENDER
        stats = GameStats(
            positions=len(game),
            edges=game.num_edges,
            max_rank=game.max_rank,
            grade=game.grade,
            bound=game.bound,
            millis=t.elapsed_ms,
        )
        oracle_agrees = None
        if self.cfg.oracle:
            from nomcheck.oracle import oracle_verdict
            oracle_agrees = (oracle_verdict(fra, phi0, config) == satisfied)
            if not oracle_agrees:
                log.warning(f'oracle disagrees with the game verdict {"SAT" if satisfied else "UNSAT"} for: {phi0}')
        log.info(f'{"SAT" if satisfied else "UNSAT"}: {game} solved with {repr(self.cfg.solver)} in {t.pretty}')
        return CheckResult(satisfied, phi0, stats, game, regions, oracle_agrees)


def model_check(fra: Fra, phi: Formula, config: Config, solver: str = 'zielonka', max_positions: Optional[int] = 1_000_000, oracle: bool = False) -> CheckResult:
    return ModelChecker(ModelChecker.cfg(solver=solver, max_positions=max_positions, oracle=oracle)).check(fra, phi, config)


# ========================================================================= #
# END                                                                       #
# ========================================================================= #
