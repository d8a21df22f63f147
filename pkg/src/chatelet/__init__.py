"""Exact-arithmetic verification for Chatelet surfaces over Q.

The package certifies, with no floating point anywhere, local solvability
at every place, irreducibility of biquadratic quartics, and explicit
rational points, both for individual surfaces y^2 - alpha z^2 = P(x) and
for the fixed pencil over the projective (u : v)-line whose single
pointless rational fiber sits over (1 : 0).
"""

from .bundle import (
    P0,
    PENCIL,
    PINF,
    ChateletBundle,
    FiberEntry,
    ProjectivePoint,
    ScanReport,
    ab_parameters,
    ac_curve_value,
    degenerate_locus_check,
    discriminant_curve_value,
    fiber_at,
    fiber_polynomial,
    p_t_polynomial,
    projective_points_by_height,
    real_point_identity_check,
    scan_family,
    theorem_form_verifies,
    valuation_lemma_v2,
    valuation_lemma_v3,
    verify_fiber_irreducible,
)
from .curves import (
    CurvePoint,
    QuarticCurve,
    ac_product_curve,
    affine_point_search,
    discriminant_curve,
    local_points_evidence,
    points_at_infinity,
    symmetry_case_analysis_ac_curve,
)
from .errors import (
    ChateletError,
    DegenerateFiber,
    FactoringExceededBudget,
    InseparableInput,
    NotALocalSquare,
    PreconditionViolated,
)
from .localfields import (
    REAL_PLACE,
    FinitePlace,
    PAdicApproximation,
    Place,
    RealPlace,
    cornacchia_prime_two_squares,
    hensel_lift_sqrt,
    hilbert_symbol,
    is_square_in_Qp,
    is_square_in_R,
    sum_of_two_squares,
)
from .quartic import (
    BiquadraticQuartic,
    FactorizationOverQ,
    QuarticPoly,
    biquadratic_irreducible,
    evaluate,
    factorization_oracle,
    homogenize_value_at_infinity,
    is_separable,
    real_root_count,
)
from .rational import (
    Factorization,
    Rational,
    factor,
    height,
    is_prime,
    is_rational_square,
    legendre_symbol,
    padic_valuation,
    squarefree_part,
)
from .surface import (
    AT_INFINITY,
    CANDIDATE_HASSE_VIOLATION,
    HAS_POINT,
    LOCALLY_OBSTRUCTED,
    NOT_SOLVABLE,
    SOLVABLE,
    UNDECIDED,
    UNKNOWN,
    ChateletSurface,
    GlobalPoint,
    HasseReport,
    LocalCertificate,
    LocalSolvabilityReport,
    SolvabilityVerdict,
    bad_primes,
    deep_local_search,
    everywhere_locally_solvable,
    find_rational_point,
    good_prime_solvability,
    hasse_violation_report,
    iskovskikh_surface,
    rationals_by_height,
    real_solvability,
    verify_certificate,
    verify_global_point,
)

__version__ = "0.1.0"
