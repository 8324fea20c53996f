"""Exact Hochschild cohomology and Gerstenhaber structure of quadratic
string algebras presented by bound quivers.

The package computes cohomology dimensions two ways — closed-form counting
of combinatorial pair classes, and ranks/kernels of the actual cochain
differentials over an exact field — and computes the cup product and
bracket at chain level, with certified nonvanishing witnesses in high
degrees.  The two routes cross-validate each other throughout.
"""

from .cochain import (
    Cochain,
    DegreeData,
    OracleComplex,
    apply_differential,
    block_components,
    class_of,
    coboundary_basis,
    cochain_add,
    cochain_eq,
    cochain_from_pairs,
    cochain_scale,
    cochain_sub,
    cocycle_basis,
    differential_matrix,
    hh_dim_oracle,
    is_zero_class,
    oracle,
    zero_cochain,
)
from .combinatorics import (
    APSet,
    BasisPathSet,
    CyclicPairData,
    PairClass,
    ParallelPair,
    classify_cyclic,
    classify_pair,
    empty_pairs,
    enumerate_ap,
    enumerate_basis_paths,
    gentle_pairs,
    norm_of,
    orbit_count,
    order_of,
    parallel_pairs,
    phi,
    rotate,
    trivial_path_pairs,
)
from .formulas import (
    DimensionReport,
    hh0_dim,
    hh1_dim,
    hh_dim_formula,
    hhn_dim,
    hhn_dim_gentle,
)
from .gerstenhaber import (
    GradedElement,
    Witness,
    bracket,
    bracket_class,
    check_witness,
    circ,
    circ_i,
    cup,
    cup_class,
    find_bracket_witness,
    find_cup_witness,
    norm_cochain,
    omega_power,
    psi,
)
from .linalg import (
    FieldSpec,
    Scalar,
    SparseMatrix,
    SubspaceBasis,
    column_space_basis,
    kernel_basis,
    rank,
    reduce_mod,
)
from .quiver import (
    Arrow,
    BoundQuiver,
    HypothesisViolation,
    Path,
    ValidationReport,
    WitnessCycle,
    check_finite_dimensional,
    validate_gentle,
    validate_string,
)
from .quiverfile import QuiverParseError, emit_quiver, parse_quiver_file, parse_quiver_text

__version__ = "0.1.0"

__all__ = [
    "APSet",
    "Arrow",
    "BasisPathSet",
    "BoundQuiver",
    "Cochain",
    "CyclicPairData",
    "DegreeData",
    "DimensionReport",
    "FieldSpec",
    "GradedElement",
    "HypothesisViolation",
    "OracleComplex",
    "PairClass",
    "ParallelPair",
    "Path",
    "QuiverParseError",
    "Scalar",
    "SparseMatrix",
    "SubspaceBasis",
    "ValidationReport",
    "Witness",
    "WitnessCycle",
    "apply_differential",
    "block_components",
    "bracket",
    "bracket_class",
    "check_finite_dimensional",
    "check_witness",
    "circ",
    "circ_i",
    "class_of",
    "classify_cyclic",
    "classify_pair",
    "coboundary_basis",
    "cochain_add",
    "cochain_eq",
    "cochain_from_pairs",
    "cochain_scale",
    "cochain_sub",
    "cocycle_basis",
    "column_space_basis",
    "cup",
    "cup_class",
    "differential_matrix",
    "emit_quiver",
    "empty_pairs",
    "enumerate_ap",
    "enumerate_basis_paths",
    "find_bracket_witness",
    "find_cup_witness",
    "gentle_pairs",
    "hh0_dim",
    "hh1_dim",
    "hh_dim_formula",
    "hh_dim_oracle",
    "hhn_dim",
    "hhn_dim_gentle",
    "is_zero_class",
    "kernel_basis",
    "norm_cochain",
    "norm_of",
    "omega_power",
    "oracle",
    "orbit_count",
    "order_of",
    "parallel_pairs",
    "parse_quiver_file",
    "parse_quiver_text",
    "phi",
    "psi",
    "rank",
    "reduce_mod",
    "rotate",
    "trivial_path_pairs",
    "validate_gentle",
    "validate_string",
    "zero_cochain",
]
