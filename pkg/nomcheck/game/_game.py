#  ~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~
#  MIT License
#
#  Copyright (c) 2022 The nomcheck Authors
#
#  Distributed under the terms of the MIT License,
#  see LICENSE.txt in the project root for the full license text.
#  ~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~

from dataclasses import asdict
from dataclasses import dataclass
from typing import Dict
from typing import Hashable
from typing import Iterable
from typing import Mapping
from typing import Optional
from typing import Tuple

from nomcheck.game._position import Player


# ========================================================================= #
# Parity Games                                                              #
# ========================================================================= #


@dataclass(frozen=True)
class GameStats(object):
    positions: int
    edges: int
    max_rank: int
    grade: int = 0
    bound: int = 0
    millis: float = 0.0

    @property
    def within_bound(self) -> bool:
        return self.positions <= self.bound

    def to_dict(self) -> dict:
        return asdict(self)


class ParityGame(object):
    """
    A finite parity game over hashable positions. Defender wins infinite
    plays whose highest recurring rank is even, a player who cannot move
    loses. The game is immutable once constructed.
    """

    def __init__(
        self,
        owner: Mapping[Hashable, Player],
        rank: Mapping[Hashable, int],
        moves: Mapping[Hashable, Iterable[Hashable]],
        root: Optional[Hashable] = None,
        grade: int = 0,
        bound: int = 0,
        millis: float = 0.0,
    ):
        self._owner = dict(owner)
        self._rank = dict(rank)
        self._succs: Dict[Hashable, Tuple[Hashable, ...]] = {v: tuple(dict.fromkeys(moves.get(v, ()))) for v in self._owner}
        # checks
        if set(self._rank) != set(self._owner):
            raise ValueError('owner and rank maps must cover the same positions')
        for v, succs in self._succs.items():
            for w in succs:
                if w not in self._owner:
                    raise ValueError(f'move {repr(v)} -> {repr(w)} leaves the game')
        for v, r in self._rank.items():
            if r < 0:
                raise ValueError(f'ranks must be non-negative, got: {r} for {repr(v)}')
        if (root is not None) and (root not in self._owner):
            raise ValueError(f'root {repr(root)} is not a position of the game')
        preds = {v: [] for v in self._owner}
        for v, succs in self._succs.items():
            for w in succs:
                preds[w].append(v)
        self._preds: Dict[Hashable, Tuple[Hashable, ...]] = {v: tuple(ps) for v, ps in preds.items()}
        self.root = root
        self.grade = grade
        self.bound = bound
        self.millis = millis

    @property
    def positions(self) -> Tuple[Hashable, ...]:
        return tuple(self._owner)

    def __len__(self):
        return len(self._owner)

    def __contains__(self, v):
        return v in self._owner

    def owner(self, v: Hashable) -> Player:
        return self._owner[v]

    def rank(self, v: Hashable) -> int:
        return self._rank[v]

    def successors(self, v: Hashable) -> Tuple[Hashable, ...]:
        return self._succs[v]

    def predecessors(self, v: Hashable) -> Tuple[Hashable, ...]:
        return self._preds[v]

    @property
    def num_edges(self) -> int:
        return sum(len(s) for s in self._succs.values())

    @property
    def max_rank(self) -> int:
        return max(self._rank.values(), default=0)

    @property
    def stats(self) -> GameStats:
        return GameStats(positions=len(self), edges=self.num_edges, max_rank=self.max_rank, grade=self.grade, bound=self.bound, millis=self.millis)

    def __repr__(self):
        return f'{self.__class__.__name__}(positions={len(self)}, edges={self.num_edges}, max_rank={self.max_rank})'


# ========================================================================= #
# Dumps                                                                     #
# ========================================================================= #


def dump_game(game: ParityGame, describe: bool = False) -> str:
    """
    Serialise `game` with positions numbered in construction order:

        root ; N ; d
        key ; owner ; rank ; succ_keys...

    With `describe` each line is followed by a comment holding the position.
    """
    index = {v: i for i, v in enumerate(game.positions)}
    root = '-' if (game.root is None) else index[game.root]
    lines = [f'{root} ; {game.grade} ; {game.max_rank}']
    for v, i in index.items():
        succs = ' '.join(str(index[w]) for w in game.successors(v))
        lines.append(f'{i} ; {game.owner(v)} ; {game.rank(v)} ; {succs}'.rstrip())
        if describe:
            lines.append(f'# {v}')
    return '\n'.join(lines) + '\n'


# ========================================================================= #
# END                                                                       #
# ========================================================================= #
