#  ~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~
#  MIT License
#
#  Copyright (c) 2022 The nomcheck Authors
#
#  Distributed under the terms of the MIT License,
#  see LICENSE.txt in the project root for the full license text.
#  ~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~

import logging
from collections import deque
from dataclasses import asdict
from dataclasses import dataclass
from pprint import pformat
from typing import Dict
from typing import List
from typing import Optional

from nomcheck.fra import Config
from nomcheck.fra import Fra
from nomcheck.game._bounds import grade
from nomcheck.game._bounds import orbit_size_bound
from nomcheck.game._bounds import well_bound
from nomcheck.game._game import ParityGame
from nomcheck.game._position import ClosureTriple
from nomcheck.game._position import Position
from nomcheck.game._rules import expand_moves
from nomcheck.game._rules import make_position
from nomcheck.logic import Formula
from nomcheck.logic import Modal
from nomcheck.logic import fixpoint_ranks
from nomcheck.logic import subformulas
from nomcheck.nominal import orbit_key
from nomcheck.util.profiling import Timer


log = logging.getLogger(__name__)


# ========================================================================= #
# Errors                                                                    #
# ========================================================================= #


class GameSizeError(RuntimeError):
    pass


class FormulaModelError(ValueError):
    pass


def check_formula_against_model(phi: Formula, fra: Fra) -> Formula:
    """
    Automaton labels carry exactly one name, so every modality of
    `phi` must use a declared tag applied to a single value.
    """
    problems = []
    for psi in subformulas(phi):
        if not isinstance(psi, Modal):
            continue
        label = psi.label
        if label.tag not in fra.tags:
            problems.append(f'unknown tag {repr(label.tag)} in <{label}>, the automaton declares: {sorted(fra.tags)}')
        if len(label.args) != 1:
            problems.append(f'label <{label}> has {len(label.args)} arguments, automaton labels carry exactly one name')
    if problems:
        raise FormulaModelError('formula does not fit the automaton:\n' + '\n'.join(f'- {p}' for p in dict.fromkeys(problems)))
    return phi


def check_config_against_model(cfg: Config, fra: Fra) -> Config:
    if cfg.state not in fra.avail:
        raise KeyError(f'unknown state: {repr(cfg.state)}, must be one of: {list(fra.states)}')
    if cfg.regs.domain != fra.avail[cfg.state]:
        raise ValueError(f'registers {cfg.regs} do not match the available registers {sorted(fra.avail[cfg.state])} of state {repr(cfg.state)}')
    return cfg


# ========================================================================= #
# Builder                                                                   #
# ========================================================================= #


class GameBuilder(object):
    """
    Worklist construction of the orbit game for a setup `(fra, phi0, s0)`.
    Every generated position is replaced by its canonical representative,
    so positions of the result are orbit keys and moves connect keys.
    """

    @dataclass
    class cfg(object):
        # abort once more positions than this are generated, `None` to disable
        max_positions: Optional[int] = 1_000_000
        # carry closure triples on every position (used by tests)
        track_triples: bool = False
        # the (1 + eps) factor of the orbit bound
        eps_factor: int = 2

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

    def build(self, fra: Fra, phi0: Formula, s0: Config) -> ParityGame:
        check_formula_against_model(phi0, fra)
        check_config_against_model(s0, fra)
        n = grade(phi0, fra)
        ranks = fixpoint_ranks(phi0)
        bound = orbit_size_bound(fra, phi0, eps_factor=self.cfg.eps_factor)
        # root, with its history trimmed
        history = well_bound(s0.history, s0.automaton_state, phi0, n)
        triple = ClosureTriple(phi0) if self.cfg.track_triples else None
        root = orbit_key(make_position(s0.state, s0.regs, history, phi0, ranks, triple))
        # explore
        positions: Dict[Position, Position] = {root: root}
        moves: Dict[Position, List[Position]] = {}
        queue = deque([root])
        with Timer() as t:
            while queue:
                pos = queue.popleft()
                keys = []
                for succ in expand_moves(pos, n, fra, ranks):
                    key = orbit_key(succ)
                    if key not in positions:
                        if (self.cfg.max_positions is not None) and (len(positions) >= self.cfg.max_positions):
                            raise GameSizeError(f'orbit game exceeds the ceiling of {self.cfg.max_positions} positions (theoretical bound: {bound}), raise `max_positions` to continue')
                        positions[key] = key
                        queue.append(key)
                    keys.append(positions[key])
                moves[pos] = keys
        game = ParityGame(
            owner={k: k.owner for k in positions},
            rank={k: k.rank for k in positions},
            moves=moves,
            root=root,
            grade=n,
            bound=bound,
            millis=t.elapsed_ms,
        )
        log.debug(f'built {game} for grade {n} in {t.pretty}')
        if len(game) > bound:
            log.warning(f'orbit game has {len(game)} positions, more than the bound: {bound}')
        return game


def build_orbit_game(fra: Fra, phi0: Formula, s0: Config, max_positions: Optional[int] = 1_000_000, track_triples: bool = False) -> ParityGame:
    return GameBuilder(GameBuilder.cfg(max_positions=max_positions, track_triples=track_triples)).build(fra, phi0, s0)


# ========================================================================= #
# END                                                                       #
# ========================================================================= #
