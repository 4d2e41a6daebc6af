#  ~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~
#  MIT License
#
#  Copyright (c) 2022 The nomcheck Authors
#
#  Distributed under the terms of the MIT License,
#  see LICENSE.txt in the project root for the full license text.
#  ~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~

# automata
from nomcheck.fra._automaton import TransitionKind
from nomcheck.fra._automaton import Transition
from nomcheck.fra._automaton import FraDiagnostic
from nomcheck.fra._automaton import FraValidationError
from nomcheck.fra._automaton import Fra
from nomcheck.fra._automaton import validate
from nomcheck.fra._automaton import register_index
from nomcheck.fra._automaton import format_fra

# configurations
from nomcheck.fra._config import RegisterAssignment
from nomcheck.fra._config import EMPTY_REGISTERS
from nomcheck.fra._config import Config
from nomcheck.fra._config import make_config

# semantics
from nomcheck.fra._semantics import AutomatonState
from nomcheck.fra._semantics import step
from nomcheck.fra._semantics import representative_names
from nomcheck.fra._semantics import representative_successors
from nomcheck.fra._semantics import match_states
from nomcheck.fra._semantics import permutation_oracle
