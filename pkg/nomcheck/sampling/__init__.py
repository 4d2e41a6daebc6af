#  ~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~
#  MIT License
#
#  Copyright (c) 2022 The nomcheck Authors
#
#  Distributed under the terms of the MIT License,
#  see LICENSE.txt in the project root for the full license text.
#  ~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~

# formulas
from nomcheck.sampling._formulas import random_formula

# automata
from nomcheck.sampling._automata import random_fra
from nomcheck.sampling._automata import random_config
from nomcheck.sampling._automata import random_setup

# games
from nomcheck.sampling._games import random_parity_game
