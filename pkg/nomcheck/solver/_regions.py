#  ~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~
#  MIT License
#
#  Copyright (c) 2022 The nomcheck Authors
#
#  Distributed under the terms of the MIT License,
#  see LICENSE.txt in the project root for the full license text.
#  ~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~

from collections import deque
from dataclasses import dataclass
from dataclasses import field
from typing import AbstractSet
from typing import Dict
from typing import FrozenSet
from typing import Hashable
from typing import Optional
from typing import Set
from typing import Tuple

from nomcheck.game import ParityGame
from nomcheck.game import Player


# ========================================================================= #
# Winning Regions                                                           #
# ========================================================================= #


@dataclass(frozen=True)
class WinningRegions(object):
    defender_set: FrozenSet[Hashable] = frozenset()
    attacker_set: FrozenSet[Hashable] = frozenset()
    defender_strategy: Dict[Hashable, Hashable] = field(default_factory=dict)
    attacker_strategy: Dict[Hashable, Hashable] = field(default_factory=dict)

    def region(self, player: Player) -> FrozenSet[Hashable]:
        return self.defender_set if (player is Player.DEFENDER) else self.attacker_set

    def strategy(self, player: Player) -> Dict[Hashable, Hashable]:
        return self.defender_strategy if (player is Player.DEFENDER) else self.attacker_strategy

    def winner_at(self, v: Hashable) -> Player:
        if v in self.defender_set:
            return Player.DEFENDER
        if v in self.attacker_set:
            return Player.ATTACKER
        raise KeyError(f'position is not part of the solved game: {repr(v)}')

    def same_regions(self, other: 'WinningRegions') -> bool:
        return (self.defender_set, self.attacker_set) == (other.defender_set, other.attacker_set)


def winner(game: ParityGame, regions: Optional[WinningRegions] = None) -> Player:
    """
    The player winning from the root of `game`.
    """
    if game.root is None:
        raise ValueError('game has no root position')
    if regions is None:
        from nomcheck.solver._zielonka import solve
        regions = solve(game)
    return regions.winner_at(game.root)


# ========================================================================= #
# Attractors                                                                #
# ========================================================================= #


def attractor(game: ParityGame, nodes: AbstractSet[Hashable], target: AbstractSet[Hashable], player: Player, order: Dict[Hashable, int]) -> Tuple[Set[Hashable], Dict[Hashable, Hashable]]:
    """
    Positions of the subgame `nodes` from which `player` can force a visit
    to `target`, and the moves realising this. Opponent positions without
    moves inside the subgame are attracted vacuously.
    """
    attr = set(target)
    strategy = {}
    remaining: Dict[Hashable, int] = {}
    queue = deque(sorted(attr, key=order.__getitem__))
    for v in sorted(nodes - attr, key=order.__getitem__):
        if game.owner(v) is not player and not any(w in nodes for w in game.successors(v)):
            attr.add(v)
            queue.append(v)
    while queue:
        w = queue.popleft()
        for v in game.predecessors(w):
            if (v not in nodes) or (v in attr):
                continue
            if game.owner(v) is player:
                attr.add(v)
                strategy[v] = w
                queue.append(v)
            else:
                if v not in remaining:
                    remaining[v] = sum(1 for x in game.successors(v) if x in nodes)
                remaining[v] -= 1
                if remaining[v] == 0:
                    attr.add(v)
                    queue.append(v)
    return attr, strategy


# ========================================================================= #
# END                                                                       #
# ========================================================================= #
