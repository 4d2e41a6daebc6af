#  ~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~
#  MIT License
#
#  Copyright (c) 2022 The nomcheck Authors
#
#  Distributed under the terms of the MIT License,
#  see LICENSE.txt in the project root for the full license text.
#  ~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~

# positions
from nomcheck.game._position import Player
from nomcheck.game._position import ClosureTriple
from nomcheck.game._position import Position

# games
from nomcheck.game._game import GameStats
from nomcheck.game._game import ParityGame
from nomcheck.game._game import dump_game

# bounds
from nomcheck.game._bounds import grade
from nomcheck.game._bounds import nominal_potential
from nomcheck.game._bounds import orbit_size_bound
from nomcheck.game._bounds import well_bound

# construction
from nomcheck.game._rules import owner_of
from nomcheck.game._rules import make_position
from nomcheck.game._rules import expand_moves
from nomcheck.game._builder import GameSizeError
from nomcheck.game._builder import FormulaModelError
from nomcheck.game._builder import check_formula_against_model
from nomcheck.game._builder import check_config_against_model
from nomcheck.game._builder import GameBuilder
from nomcheck.game._builder import build_orbit_game

# equivalence
from nomcheck.game._equiv import match_formulas
from nomcheck.game._equiv import nominal_equiv_positions
