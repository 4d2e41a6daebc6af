#  ~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~
#  MIT License
#
#  Copyright (c) 2022 The nomcheck Authors
#
#  Distributed under the terms of the MIT License,
#  see LICENSE.txt in the project root for the full license text.
#  ~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~=~

# syntax
from nomcheck.logic._syntax import FormulaError
from nomcheck.logic._syntax import ValueVar
from nomcheck.logic._syntax import Value
from nomcheck.logic._syntax import is_value
from nomcheck.logic._syntax import Label
from nomcheck.logic._syntax import Formula
from nomcheck.logic._syntax import Compare
from nomcheck.logic._syntax import Eq
from nomcheck.logic._syntax import Neq
from nomcheck.logic._syntax import Junction
from nomcheck.logic._syntax import Or
from nomcheck.logic._syntax import And
from nomcheck.logic._syntax import Not
from nomcheck.logic._syntax import Quantifier
from nomcheck.logic._syntax import BigOr
from nomcheck.logic._syntax import BigAnd
from nomcheck.logic._syntax import Fresh
from nomcheck.logic._syntax import Modal
from nomcheck.logic._syntax import Diamond
from nomcheck.logic._syntax import Box
from nomcheck.logic._syntax import Fixpoint
from nomcheck.logic._syntax import Mu
from nomcheck.logic._syntax import Nu
from nomcheck.logic._syntax import Var
from nomcheck.logic._syntax import DUALS
from nomcheck.logic._syntax import ValueBlock
from nomcheck.logic._syntax import RecBlock
from nomcheck.logic._syntax import ValueSubst
from nomcheck.logic._syntax import RecSubst

# measures
from nomcheck.logic._measures import children
from nomcheck.logic._measures import subformulas
from nomcheck.logic._measures import size
from nomcheck.logic._measures import bounding_depth
from nomcheck.logic._measures import count_negations
from nomcheck.logic._measures import free_value_vars
from nomcheck.logic._measures import free_rec_vars
from nomcheck.logic._measures import bound_rec_vars
from nomcheck.logic._measures import is_firm
from nomcheck.logic._measures import is_closed
from nomcheck.logic._measures import is_negation_free
from nomcheck.logic._measures import zeta

# transformations
from nomcheck.logic._subst import CaptureError
from nomcheck.logic._subst import subst_values
from nomcheck.logic._subst import subst_rec
from nomcheck.logic._subst import unfold
from nomcheck.logic._binders import normalize_binders
from nomcheck.logic._binders import is_normalized
from nomcheck.logic._negation import negation_free
from nomcheck.logic._validate import validate_formula

# alternation
from nomcheck.logic._adepth import dependency_graph
from nomcheck.logic._adepth import fixpoint_adepths
from nomcheck.logic._adepth import adepth_of
from nomcheck.logic._adepth import alternation_depth
from nomcheck.logic._adepth import fixpoint_ranks
from nomcheck.logic._adepth import rank

# printing
from nomcheck.logic._printer import format_formula
