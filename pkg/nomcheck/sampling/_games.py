#  ~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~
#  MIT License
#
#  Copyright (c) 2022 The nomcheck Authors
#
#  Distributed under the terms of the MIT License,
#  see LICENSE.txt in the project root for the full license text.
#  ~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~

from nomcheck.game import ParityGame
from nomcheck.game import Player
from nomcheck.util.seeds import RngLike
from nomcheck.util.seeds import make_rng


# ========================================================================= #
# Random Games                                                              #
# ========================================================================= #


def random_parity_game(
    rng: RngLike = None,
    max_positions: int = 12,
    max_rank: int = 4,
    dead_end_prob: float = 0.1,
) -> ParityGame:
    """
    A random game over the positions `0..n-1` rooted at `0`, most
    positions have one or two moves and some have none.
    """
    rng = make_rng(rng)
    n = int(rng.integers(1, max_positions + 1))
    owner = {v: Player.DEFENDER if (rng.random() < 0.5) else Player.ATTACKER for v in range(n)}
    rank = {v: int(rng.integers(0, max_rank + 1)) for v in range(n)}
    moves = {}
    for v in range(n):
        if rng.random() < dead_end_prob:
            moves[v] = ()
            continue
        degree = int(rng.choice([1, 1, 2, 2, 3]))
        moves[v] = tuple(int(w) for w in rng.integers(0, n, size=degree))
    return ParityGame(owner, rank, moves, root=0)


# ========================================================================= #
# END                                                                       #
# ========================================================================= #
