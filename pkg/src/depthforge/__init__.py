"""depthforge: exact computations around depth-graded Lie algebras,
period polynomials, Eisenstein series and GL2 character calculus.

Everything is exact rational arithmetic (`fractions.Fraction`); no floats.
"""

from .exactla import QMatrix, Rational, kernel_basis, rank, rref
from .ncalg import (
    DEFAULT_DEPTH_CAP,
    E0,
    E1,
    NCPoly,
    ad_pow,
    derivation_apply,
    generators,
    ihara_bracket,
    letter,
    lie_bracket,
    nc_mul,
    word_from_str,
    word_to_str,
)
from .depthlie import (
    BrownReport,
    PairCoefficients,
    bracket_matrix,
    depth2_word_basis,
    relation_kernel,
    sigma_leading,
    verify_brown_criterion,
)
from .periodpoly import (
    BivarPoly,
    PeriodSpace,
    candidate_pairs,
    is_period_poly,
    pair_to_poly,
    period_space,
    subspace_equal,
)
from .eisenstein import (
    BernPoly,
    ChainCheck,
    CosetFn,
    HeckeFactorResult,
    QExpansion,
    bernoulli_number,
    bernoulli_poly_eval,
    bernoulli_polynomial,
    check_bernoulli_sum_chain,
    delta_qexp,
    distribution_check,
    divisor_power_sum,
    eisenstein_qexp,
    frac,
    hecke_eigenvalue,
    hecke_factor,
    hecke_tp,
    phi,
    phi_line_sum,
)
from .repcalc import (
    Character,
    IrrepLabel,
    bigraded_dims,
    char_from_bigraded,
    character_decompose,
    check_no_eisenstein_component,
    irrep_char,
    tensor_decompose,
)

__version__ = "0.1.0"

__all__ = [
    "QMatrix",
    "Rational",
    "kernel_basis",
    "rank",
    "rref",
    "DEFAULT_DEPTH_CAP",
    "E0",
    "E1",
    "NCPoly",
    "ad_pow",
    "derivation_apply",
    "generators",
    "ihara_bracket",
    "letter",
    "lie_bracket",
    "nc_mul",
    "word_from_str",
    "word_to_str",
    "BrownReport",
    "PairCoefficients",
    "bracket_matrix",
    "depth2_word_basis",
    "relation_kernel",
    "sigma_leading",
    "verify_brown_criterion",
    "BivarPoly",
    "PeriodSpace",
    "candidate_pairs",
    "is_period_poly",
    "pair_to_poly",
    "period_space",
    "subspace_equal",
    "BernPoly",
    "ChainCheck",
    "CosetFn",
    "HeckeFactorResult",
    "QExpansion",
    "bernoulli_number",
    "bernoulli_poly_eval",
    "bernoulli_polynomial",
    "check_bernoulli_sum_chain",
    "delta_qexp",
    "distribution_check",
    "divisor_power_sum",
    "eisenstein_qexp",
    "frac",
    "hecke_eigenvalue",
    "hecke_factor",
    "hecke_tp",
    "phi",
    "phi_line_sum",
    "Character",
    "IrrepLabel",
    "bigraded_dims",
    "char_from_bigraded",
    "character_decompose",
    "check_no_eisenstein_component",
    "irrep_char",
    "tensor_decompose",
    "__version__",
]
