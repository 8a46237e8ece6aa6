"""Exact enumeration of (0,1)-matrices avoiding 2x2 submatrix pattern
classes up to row/column exchange: closed-form counts, an exhaustive
oracle, and the exponential generating functions tying them together.
"""

from .exactnum import bernoulli, binomial, factorial, poly_bernoulli, stirling2
from .formulas import (
    FORMULA_ALPHAS,
    NonIntegerResult,
    PhiResult,
    function_count_identity_lhs,
    function_count_identity_rhs,
    phi,
    phi_c,
    phi_gamma,
    phi_gamma_c,
    phi_i,
    phi_jo,
    phi_l,
    phi_t,
    phi_tl,
)
from .patterns import (
    CLASSES,
    SYMBOLS,
    AvoidanceSpec,
    BitMatrix,
    Pattern2x2,
    PatternClass,
    SizeLimitExceeded,
    avoids,
    class_orbit,
    complement,
    complement_image,
    contains_class,
    contains_pattern,
    count_avoiders,
    count_avoiders_naive,
    oracle_max_cells,
    transpose,
    transpose_image,
)
from .series import (
    BIVAR_ALPHAS,
    DIAG_ALPHAS,
    EQ2_ALPHAS,
    BSeries,
    NonIntegerCoefficient,
    NonzeroConstantTerm,
    USeries,
    ZeroConstantDivisor,
    compose,
    div_series,
    egf_bivar,
    egf_bivar_eq2,
    egf_diag,
    egf_to_count,
    eq2_compare,
    exp_series,
    lambert_w,
)

__version__ = "0.1.0"

__all__ = [
    "__version__",
    # exactnum
    "factorial",
    "binomial",
    "stirling2",
    "bernoulli",
    "poly_bernoulli",
    # patterns
    "SYMBOLS",
    "Pattern2x2",
    "PatternClass",
    "CLASSES",
    "AvoidanceSpec",
    "BitMatrix",
    "SizeLimitExceeded",
    "class_orbit",
    "contains_pattern",
    "contains_class",
    "avoids",
    "count_avoiders",
    "count_avoiders_naive",
    "complement",
    "transpose",
    "complement_image",
    "transpose_image",
    "oracle_max_cells",
    # formulas
    "NonIntegerResult",
    "PhiResult",
    "phi",
    "phi_i",
    "phi_gamma",
    "phi_c",
    "phi_gamma_c",
    "phi_t",
    "phi_l",
    "phi_tl",
    "phi_jo",
    "FORMULA_ALPHAS",
    "function_count_identity_lhs",
    "function_count_identity_rhs",
    # series
    "USeries",
    "BSeries",
    "NonzeroConstantTerm",
    "ZeroConstantDivisor",
    "NonIntegerCoefficient",
    "exp_series",
    "div_series",
    "compose",
    "lambert_w",
    "egf_bivar",
    "egf_bivar_eq2",
    "egf_diag",
    "egf_to_count",
    "eq2_compare",
    "BIVAR_ALPHAS",
    "EQ2_ALPHAS",
    "DIAG_ALPHAS",
]
