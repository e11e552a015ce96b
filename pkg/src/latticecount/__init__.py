"""Exact lattice-point counting for rational simplices with per-facet dilation.

The package counts integer points in regions {x : A x <= t} where A is the
facet matrix of a rational simplex and every facet gets its own integer
offset, plus closed forms for rectangular rational triangles and counts for
arbitrary simple rational polygons.  All production arithmetic is exact.
"""

from .core import (
    DilationVector,
    InvalidDilationError,
    InvalidSimplexError,
    LatticeCountError,
    Point,
    Rational,
    SimplexSystem,
    ValidityReport,
    floor_div,
    validate_dilation,
    vertices,
)
from .dedekind import (
    NumericConsistencyError,
    dedekind_rademacher_sum,
    fourier_dedekind_numeric,
    fourier_identity_check,
    sawtooth,
)
from .oracle import (
    DEFAULT_CELL_BUDGET,
    CellBudgetExceededError,
    count_closure_bruteforce,
    count_interior_bruteforce,
)
from .polygon import (
    PolygonError,
    PolygonSpec,
    boundary_lattice_count,
    count_closure_polygon,
    count_interior_polygon,
    picks_check,
    segment_lattice_count,
)
from .quasipoly import (
    NotQuasipolynomialError,
    Quasipolynomial,
    faulhaber,
    interpolate,
    lemma1_sum,
)
from .recursion import (
    count_closure,
    count_interior,
    reciprocity_check,
    signed_range_sum,
)
from .reduction import (
    ReductionStep,
    first_coordinate_functional,
    reduced_system,
    unimodular_reduce,
)
from .triangle import (
    TriangleDilation,
    TriangleSpec,
    closed_form_value,
    count_closure_triangle,
    count_interior_triangle,
    dilation_vector,
    e_value,
    is_valid_dilation,
    nu_coefficients,
    residue_z1,
    to_simplex_system,
    unity_residue_sums,
)

__version__ = "0.1.0"

__all__ = [
    "CellBudgetExceededError",
    "DEFAULT_CELL_BUDGET",
    "DilationVector",
    "InvalidDilationError",
    "InvalidSimplexError",
    "LatticeCountError",
    "NotQuasipolynomialError",
    "NumericConsistencyError",
    "Point",
    "PolygonError",
    "PolygonSpec",
    "Quasipolynomial",
    "Rational",
    "ReductionStep",
    "SimplexSystem",
    "TriangleDilation",
    "TriangleSpec",
    "ValidityReport",
    "boundary_lattice_count",
    "closed_form_value",
    "count_closure",
    "count_closure_bruteforce",
    "count_closure_polygon",
    "count_closure_triangle",
    "count_interior",
    "count_interior_bruteforce",
    "count_interior_polygon",
    "count_interior_triangle",
    "dedekind_rademacher_sum",
    "dilation_vector",
    "e_value",
    "faulhaber",
    "first_coordinate_functional",
    "floor_div",
    "fourier_dedekind_numeric",
    "fourier_identity_check",
    "interpolate",
    "is_valid_dilation",
    "lemma1_sum",
    "nu_coefficients",
    "picks_check",
    "reciprocity_check",
    "reduced_system",
    "residue_z1",
    "sawtooth",
    "segment_lattice_count",
    "signed_range_sum",
    "to_simplex_system",
    "unimodular_reduce",
    "unity_residue_sums",
    "validate_dilation",
    "vertices",
]
