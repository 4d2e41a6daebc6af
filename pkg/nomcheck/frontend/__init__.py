#  ~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~
#  MIT License
#
#  Copyright (c) 2022 The nomcheck Authors
#
#  Distributed under the terms of the MIT License,
#  see LICENSE.txt in the project root for the full license text.
#  ~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~

# formulas
from nomcheck.frontend._formula_parser import FormulaSyntaxError
from nomcheck.frontend._formula_parser import FORMULA_GRAMMAR
from nomcheck.frontend._formula_parser import parse_formula

# automata
from nomcheck.frontend._fra_parser import FraSyntaxError
from nomcheck.frontend._fra_parser import FRA_GRAMMAR
from nomcheck.frontend._fra_parser import parse_fra
from nomcheck.frontend._fra_parser import load_fra

# command line values
from nomcheck.frontend._cli_values import parse_name
from nomcheck.frontend._cli_values import parse_names
from nomcheck.frontend._cli_values import parse_registers
