"""Exact counts of n x n matrix classes over finite fields.

Every count is available through at least two independent routes (closed
formulas and truncated generating functions), cross-validated against an
exhaustive small-field enumeration oracle; see the verify module.
"""

from .exact_series import (
    DEFAULT_ORDER,
    NonzeroConstantTerm,
    TruncSeries,
    ZeroConstantTerm,
)
from .ffpoly import (
    FieldSpec,
    NotCoprime,
    build_field,
    cyclotomic_factor_degrees,
    field_for,
    irreducible_poly_count,
    moebius,
    multiplicative_order,
    squarefree_test,
)
from .gfengine import (
    BadKindParams,
    GF_KINDS,
    LIMIT_KINDS,
    NonIntegralCount,
    centralizer_order,
    euler_inverse_factor,
    extract_count,
    gf_build,
    limit_eval,
    nu_weighted_product,
    partitions_of,
    q_stirling_via_gf,
)
from .oracle import (
    BudgetExceeded,
    FqMatrix,
    char_poly,
    classify,
    conjugacy_class_count,
    count_matching,
    enumerate_matrices,
    max_class_size,
    min_centralizer_order,
    min_poly,
    sweep_counts,
)
from .qcount import (
    CharNotTwo,
    PrimePower,
    diagonalizable_count,
    gaussian_binomial,
    gl_order,
    involution_count_char2,
    linear_derangement_count,
    linear_derangement_reduced,
    nilpotent_count,
    projection_count,
    q_bell,
    q_factorial,
    q_int,
    q_multinomial,
    q_stirling,
    rank_count,
    separable_class_count,
    subspace_total,
)
from .sequences import (
    SEQUENCE_NAMES,
    SequenceSpec,
    UnsupportedSequence,
    emit_bfile,
    emit_json,
    emit_plain,
    make_spec,
    parse_bfile,
    sequence_values,
    triangle_rows,
)
from .verify import CheckResult, run_all

__version__ = "0.1.0"

__all__ = [
    "BadKindParams",
    "BudgetExceeded",
    "CharNotTwo",
    "CheckResult",
    "DEFAULT_ORDER",
    "FieldSpec",
    "FqMatrix",
    "GF_KINDS",
    "LIMIT_KINDS",
    "NonIntegralCount",
    "NonzeroConstantTerm",
    "NotCoprime",
    "PrimePower",
    "SEQUENCE_NAMES",
    "SequenceSpec",
    "TruncSeries",
    "UnsupportedSequence",
    "ZeroConstantTerm",
    "build_field",
    "centralizer_order",
    "char_poly",
    "classify",
    "conjugacy_class_count",
    "count_matching",
    "cyclotomic_factor_degrees",
    "diagonalizable_count",
    "emit_bfile",
    "emit_json",
    "emit_plain",
    "enumerate_matrices",
    "euler_inverse_factor",
    "extract_count",
    "field_for",
    "gaussian_binomial",
    "gf_build",
    "gl_order",
    "involution_count_char2",
    "irreducible_poly_count",
    "limit_eval",
    "linear_derangement_count",
    "linear_derangement_reduced",
    "make_spec",
    "max_class_size",
    "min_centralizer_order",
    "min_poly",
    "moebius",
    "multiplicative_order",
    "nilpotent_count",
    "nu_weighted_product",
    "parse_bfile",
    "partitions_of",
    "projection_count",
    "q_bell",
    "q_factorial",
    "q_int",
    "q_multinomial",
    "q_stirling",
    "q_stirling_via_gf",
    "rank_count",
    "run_all",
    "separable_class_count",
    "sequence_values",
    "squarefree_test",
    "subspace_total",
    "sweep_counts",
    "triangle_rows",
]
