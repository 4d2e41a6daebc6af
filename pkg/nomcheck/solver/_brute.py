#  ~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~
#  MIT License
#
#  Copyright (c) 2022 The nomcheck Authors
#
#  Distributed under the terms of the MIT License,
#  see LICENSE.txt in the project root for the full license text.
#  ~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~

import itertools
import logging
from collections import deque
from typing import Dict
from typing import FrozenSet
from typing import Hashable
from typing import Iterable
from typing import Set

from nomcheck.game import ParityGame
from nomcheck.game import Player
from nomcheck.solver._regions import WinningRegions


log = logging.getLogger(__name__)


MAX_BRUTE_FORCE_POSITIONS = 14


# ========================================================================= #
# Helper                                                                    #
# ========================================================================= #


def _good_rank(player: Player, r: int) -> bool:
    return (r % 2 == 0) if (player is Player.DEFENDER) else (r % 2 == 1)


def _reach(edges: Dict[Hashable, Iterable[Hashable]], sources: Iterable[Hashable], allowed: Set[Hashable]) -> Set[Hashable]:
    seen = set()
    queue = deque(v for v in sources if v in allowed)
    while queue:
        v = queue.popleft()
        for w in edges[v]:
            if (w in allowed) and (w not in seen):
                seen.add(w)
                queue.append(w)
    return seen


def _one_player_wins(game: ParityGame, fixed: Player, choice: Dict[Hashable, Hashable]) -> FrozenSet[Hashable]:
    """
    Positions won by the opponent of `fixed` once `fixed` commits to `choice`.
    The opponent then plays a one-player game: it wins by reaching a stuck
    `fixed` position or a cycle whose highest rank is good for it.
    """
    player = fixed.opponent
    edges = {}
    for v in game.positions:
        if game.owner(v) is fixed:
            edges[v] = (choice[v],) if (v in choice) else ()
        else:
            edges[v] = game.successors(v)
    goals = {v for v in game.positions if game.owner(v) is fixed and not edges[v]}
    everything = set(game.positions)
    for u in game.positions:
        r = game.rank(u)
        if not _good_rank(player, r):
            continue
        low = {v for v in game.positions if game.rank(v) <= r}
        if u in _reach(edges, [u], low):
            goals.add(u)
    # backwards reachability of the goals
    rev = {v: [] for v in game.positions}
    for v, ws in edges.items():
        for w in ws:
            rev[w].append(v)
    return frozenset(_reach(rev, goals, everything) | goals)


def _strategies(game: ParityGame, player: Player):
    owned = [v for v in game.positions if game.owner(v) is player and game.successors(v)]
    for picks in itertools.product(*(game.successors(v) for v in owned)):
        yield dict(zip(owned, picks))


# ========================================================================= #
# Brute Force                                                               #
# ========================================================================= #


def brute_force_solve(game: ParityGame) -> WinningRegions:
    """
    Solve a tiny game by enumerating all positional strategies of each player.
    Only meant as a reference for testing the real solver.
    """
    if len(game) > MAX_BRUTE_FORCE_POSITIONS:
        raise ValueError(f'game is too large for brute force solving, got: {len(game)} positions, max: {MAX_BRUTE_FORCE_POSITIONS}')
    if not len(game):
        return WinningRegions()
    regions, strategies = {}, {}
    for player in (Player.DEFENDER, Player.ATTACKER):
        region, options = set(), []
        for choice in _strategies(game, player):
            # positions where this strategy holds against everything
            won = frozenset(game.positions) - _one_player_wins(game, player, choice)
            region |= won
            options.append((won, choice))
        regions[player] = frozenset(region)
        strategies[player] = options
    if regions[Player.DEFENDER] & regions[Player.ATTACKER]:
        raise RuntimeError('both players win a common position, the game is not determined!')
    if (regions[Player.DEFENDER] | regions[Player.ATTACKER]) != frozenset(game.positions):
        raise RuntimeError('winning regions do not cover the game!')
    # positional determinacy gives a single uniform strategy
    chosen = {}
    for player, options in strategies.items():
        won, choice = next(((w, c) for w, c in options if w == regions[player]), (None, None))
        if choice is None:
            raise RuntimeError(f'no uniform winning strategy found for: {player}')
        chosen[player] = {v: w for v, w in choice.items() if v in won}
    log.debug(f'brute forced {game}')
    return WinningRegions(
        defender_set=regions[Player.DEFENDER],
        attacker_set=regions[Player.ATTACKER],
        defender_strategy=chosen[Player.DEFENDER],
        attacker_strategy=chosen[Player.ATTACKER],
    )


# ========================================================================= #
# END                                                                       #
# ========================================================================= #
