"""Exact Ehrhart polynomials of integer lattice squares, cubes and hypercubes in dimensions 2 to 4.

Closed forms live in :mod:`squares`, :mod:`planes` and :mod:`cubes`; the
independent point counter in :mod:`oracle` checks them.
"""

from .arith import decompose_two_squares, gcd_many, is_sum_three_squares, is_sum_two_squares
from .cubes import (
    CORPUS,
    OrthoFrame,
    cube_from_twins_3d,
    ehrhart_cube_3d,
    ehrhart_cube_in_4d,
    ehrhart_hypercube,
    hypercube_from_quaternions,
    validate_frame,
)
from .errors import (
    DegeneratePlaneError,
    FrameValidationError,
    InvariantViolation,
    LatticeError,
    OracleMismatch,
    SearchBudgetExceeded,
    TwinValidationError,
    ValidationError,
)
from .gaussian import GaussianInt, gaussian_gcd
from .oracle import corner_count_direct, count_frame, count_square, fit_ehrhart
from .planes import (
    PlaneData,
    minimal_square_in_plane,
    minors_from_pair,
    plane_data_from_pair,
    plane_from_representations,
    sublattice_basis,
)
from .polynomial import EhrhartPolynomial, fit_polynomial
from .quaternions import Quaternion, UnitSymbol, quadruple_from_quaternion, quaternion_from_quadruple
from .sequences import ApsTable, QuadrupleTable, aps2_terms, aps_witnessed, quadruple_table, search_k_square
from .squares import (
    TwinPair,
    aps_witness_even,
    aps_witness_odd,
    double_square_4d,
    ehrhart_square_2d,
    ehrhart_square_3d,
    ehrhart_square_generic,
    param_square_3d,
    validate_twin,
)

__version__ = "0.1.0"
