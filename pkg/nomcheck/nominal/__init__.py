#  ~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~
#  MIT License
#
#  Copyright (c) 2022 The nomcheck Authors
#
#  Distributed under the terms of the MIT License,
#  see LICENSE.txt in the project root for the full license text.
#  ~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~

# names & permutations
from nomcheck.nominal._names import Name
from nomcheck.nominal._names import names
from nomcheck.nominal._names import smallest_name_not_in
from nomcheck.nominal._names import Permutation
from nomcheck.nominal._names import IDENTITY
from nomcheck.nominal._names import swap
from nomcheck.nominal._names import compose
from nomcheck.nominal._names import PartialInjection
from nomcheck.nominal._names import extend_match

# group action
from nomcheck.nominal._action import Nominal
from nomcheck.nominal._action import apply
from nomcheck.nominal._action import iter_names
from nomcheck.nominal._action import support
from nomcheck.nominal._action import canonical_renaming
from nomcheck.nominal._action import orbit_key
from nomcheck.nominal._action import fresh_name
