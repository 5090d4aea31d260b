"""Exact relative projection constants of hyperplanes in polyhedral normed spaces."""

from .errors import DomainError, Indeterminate, InvalidInput, InvariantViolation
from .exact import LinearProgram, LpSolution, matrix_rank, solve_linear_system, solve_lp
from .interval import Interval
from .l1 import L1FormulaTrace, ThresholdTrace, is_max_l1, l12_threshold, lambda_l1
from .maximality import (
    Bosz3Report,
    MaximalityCertificate,
    Maxmin3Report,
    check_bohnenblust_equality,
    enumerate_max_hyperplanes,
    explore_infimum,
    maxmin3_bound,
    parallelogram_section,
    phi,
    sandwich_check,
    verify_bosz3,
)
from .polytope import (
    SymmetricPolytope,
    cross_polytope,
    cube,
    dual_norm_of,
    facet_containing,
    facets_from_vertices,
    norm_of,
    reduce_to_extreme,
    sandwich_parallelotope,
)
from .projection import (
    HyperplaneProjection,
    PlaneProjection,
    extend_functional,
    helly_witness,
    min_projection_hyperplane,
    operator_norm,
    projection_onto_plane,
    transfer_from_l1,
)

__version__ = "0.1.0"
