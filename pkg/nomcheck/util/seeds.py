#  ~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~
#  MIT License
#
#  Copyright (c) 2022 The nomcheck Authors
#
#  Distributed under the terms of the MIT License,
#  see LICENSE.txt in the project root for the full license text.
#  ~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~

import logging
from typing import Union

import numpy as np


log = logging.getLogger(__name__)


# ========================================================================= #
# Random Generators                                                         #
# ========================================================================= #


RngLike = Union[None, int, np.random.Generator]


def make_rng(seed: RngLike = None) -> np.random.Generator:
    """
    Obtain a generator from a seed, existing generators are passed through.
    - PCG64 is numpy's default bit generator, it is fast with good statistics
    """
    if isinstance(seed, np.random.Generator):
        return seed
    if seed is None:
        seed = np.random.randint(0, 2**32)
        log.debug(f'[SEEDING]: no seed was specified, drew: {seed}')
    return np.random.Generator(np.random.PCG64(seed=int(seed)))


# ========================================================================= #
# END                                                                       #
# ========================================================================= #
