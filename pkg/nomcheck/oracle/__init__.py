#  ~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~
#  MIT License
#
#  Copyright (c) 2022 The nomcheck Authors
#
#  Distributed under the terms of the MIT License,
#  see LICENSE.txt in the project root for the full license text.
#  ~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~

# pools
from nomcheck.oracle._pool import NamePool
from nomcheck.oracle._pool import ConfigSet
from nomcheck.oracle._pool import PoolError
from nomcheck.oracle._pool import check_in_pool
from nomcheck.oracle._pool import extend_pool
from nomcheck.oracle._pool import default_pool
from nomcheck.oracle._pool import enumerate_configs

# evaluation
from nomcheck.oracle._eval import RecBinding
from nomcheck.oracle._eval import VariableAssignment
from nomcheck.oracle._eval import Evaluator
from nomcheck.oracle._eval import evaluate
from nomcheck.oracle._eval import oracle_verdict
from nomcheck.oracle._eval import check_self_duality
