#  ~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~
#  MIT License
#
#  Copyright (c) 2022 The nomcheck Authors
#
#  Distributed under the terms of the MIT License,
#  see LICENSE.txt in the project root for the full license text.
#  ~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~

import logging
import time
from contextlib import ContextDecorator
from math import log10
from typing import Optional


log = logging.getLogger(__name__)


# ========================================================================= #
# Context Manager Timer                                                     #
# ========================================================================= #


class Timer(ContextDecorator):
    """
    Accumulating wall-clock timer for game construction, solving
    and oracle runs. If named, each exit logs the total so far.

        with Timer('solve', log_level=logging.DEBUG) as t:
            regions = solve(game)
        millis = t.elapsed_ms
    """

    def __init__(self, name: Optional[str] = None, log_level: int = logging.INFO):
        self.name = name
        self._log_level = log_level
        self._start_ns: Optional[int] = None
        self._total_ns = 0

    def __enter__(self):
        self._start_ns = time.perf_counter_ns()
        return self

    def __exit__(self, *args, **kwargs):
        self._total_ns += time.perf_counter_ns() - self._start_ns
        self._start_ns = None
        if self.name:
            log.log(self._log_level, f'{self.name}: {self.pretty}')

    @property
    def elapsed_ns(self) -> int:
        if self._start_ns is not None:
            return self._total_ns + (time.perf_counter_ns() - self._start_ns)
        return self._total_ns

    @property
    def elapsed_ms(self) -> float:
        return self.elapsed_ns / 1_000_000

    @property
    def pretty(self) -> str:
        return Timer.prettify_time(self.elapsed_ns)

    def __str__(self):
        return self.pretty

    @staticmethod
    def prettify_time(ns: int) -> str:
        if ns <= 0:
            return 'N/A' if (ns == 0) else 'NaN'
        power = min(3, int(log10(ns) // 3))
        value = ns / 1000**power
        if power < 3 or value < 60:
            return f'{value:.3f}{["ns", "µs", "ms", "s"][power]}'
        m, s = divmod(int(value), 60)
        h, m = divmod(m, 60)
        return f'{h}h:{m}m:{s}s' if h else f'{m}m:{s}s'


# ========================================================================= #
# END                                                                       #
# ========================================================================= #
