#  ~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~
#  MIT License
#
#  Copyright (c) 2022 The nomcheck Authors
#
#  Distributed under the terms of the MIT License,
#  see LICENSE.txt in the project root for the full license text.
#  ~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~

# regions
from nomcheck.solver._regions import WinningRegions
from nomcheck.solver._regions import attractor
from nomcheck.solver._regions import winner

# solvers
from nomcheck.solver._zielonka import solve
from nomcheck.solver._brute import brute_force_solve
from nomcheck.solver._brute import MAX_BRUTE_FORCE_POSITIONS
