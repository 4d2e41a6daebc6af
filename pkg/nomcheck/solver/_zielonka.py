#  ~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~
#  MIT License
#
#  Copyright (c) 2022 The nomcheck Authors
#
#  Distributed under the terms of the MIT License,
#  see LICENSE.txt in the project root for the full license text.
#  ~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~

import logging
from typing import Dict
from typing import FrozenSet
from typing import Hashable

from nomcheck.game import ParityGame
from nomcheck.game import Player
from nomcheck.solver._regions import WinningRegions
from nomcheck.solver._regions import attractor
from nomcheck.util.profiling import Timer


log = logging.getLogger(__name__)


# ========================================================================= #
# Zielonka                                                                  #
# ========================================================================= #


class _Solution(object):

    def __init__(self):
        self.region = {Player.DEFENDER: set(), Player.ATTACKER: set()}
        self.strategy = {Player.DEFENDER: {}, Player.ATTACKER: {}}

    def win(self, player: Player, nodes, strategy: Dict[Hashable, Hashable]):
        self.region[player].update(nodes)
        self.strategy[player].update(strategy)


def solve(game: ParityGame) -> WinningRegions:
    """
    Zielonka's recursive algorithm. A position without moves is won by the
    opponent of its owner, these are peeled off with attractors first.
    """
    order = {v: i for i, v in enumerate(game.positions)}
    with Timer() as t:
        sol = _solve(game, frozenset(game.positions), order)
    log.debug(f'solved {game} in {t.pretty}')
    return WinningRegions(
        defender_set=frozenset(sol.region[Player.DEFENDER]),
        attacker_set=frozenset(sol.region[Player.ATTACKER]),
        defender_strategy=sol.strategy[Player.DEFENDER],
        attacker_strategy=sol.strategy[Player.ATTACKER],
    )


def _dead_ends(game: ParityGame, nodes: FrozenSet[Hashable], owner: Player):
    return {v for v in nodes if game.owner(v) is owner and not any(w in nodes for w in game.successors(v))}


def _solve(game: ParityGame, nodes: FrozenSet[Hashable], order: Dict[Hashable, int]) -> _Solution:
    sol = _Solution()
    # the remainder after removing an attractor is a trap for the
    # attracting player, so solutions of the remainder carry over
    while nodes:
        # 1. a stuck player loses
        for stuck in (Player.ATTACKER, Player.DEFENDER):
            dead = _dead_ends(game, nodes, stuck)
            if dead:
                attr, strat = attractor(game, nodes, dead, stuck.opponent, order)
                sol.win(stuck.opponent, attr, strat)
                nodes = nodes - attr
                break
        else:
            # 2. attract to the highest rank
            d = max(game.rank(v) for v in nodes)
            p = Player.DEFENDER if (d % 2 == 0) else Player.ATTACKER
            top = {v for v in nodes if game.rank(v) == d}
            attr, strat = attractor(game, nodes, top, p, order)
            sub = _solve(game, nodes - attr, order)
            if not sub.region[p.opponent]:
                # p wins everywhere, leaving the top positions anywhere inside
                stay = {}
                for v in sorted(top, key=order.__getitem__):
                    if game.owner(v) is p:
                        stay[v] = next(w for w in game.successors(v) if w in nodes)
                sol.win(p, nodes, {**sub.strategy[p], **strat, **stay})
                break
            # 3. the opponent wins its sub-region and everything it can force there
            attr, strat = attractor(game, nodes, sub.region[p.opponent], p.opponent, order)
            sol.win(p.opponent, attr, {**sub.strategy[p.opponent], **strat})
            nodes = nodes - attr
    return sol


# ========================================================================= #
# END                                                                       #
# ========================================================================= #
