"""Symbolic and certified-numeric machinery for Thurston's Master Teapot:
tent-map itineraries, Parry polynomials, kneading power series, and
membership certification for the slices of the teapot."""

from .kneading import (
    ItineraryPrefix,
    itinerary_period,
    itinerary_prefix,
    right_limit_itinerary,
    tent_orbit,
    zero_run_bound,
)
from .membership import (
    AmbiguousModulus,
    Certificate,
    MarginInsufficient,
    Method,
    Verdict,
    ball_radius,
    certify_ball,
    certify_inside,
    certify_outside,
    reduce_to_fundamental,
    test_point,
)
from .rates import GrowthRate
from .roots import NonConvergence, RootSet, all_roots, conjugates_in_disk, leading_root
from .series import (
    F_eval,
    F_polynomial,
    IntPolynomial,
    NegativeSignWord,
    SeriesPartial,
    g_series,
    h_series,
    parry_polynomial,
    verify_ghp,
)
from .suitability import SuitabilityContext, enumerate_M, prefix_conditions
from .words import (
    NotRenormalizable,
    SymbolSeq,
    Word,
    cumulative_sign,
    double,
    double_prime,
    is_admissible,
    is_dominant,
    renormalize,
    shift,
    twisted_compare,
)

__all__ = [
    "AmbiguousModulus",
    "Certificate",
    "F_eval",
    "F_polynomial",
    "GrowthRate",
    "IntPolynomial",
    "ItineraryPrefix",
    "MarginInsufficient",
    "Method",
    "NegativeSignWord",
    "NonConvergence",
    "NotRenormalizable",
    "RootSet",
    "SeriesPartial",
    "SuitabilityContext",
    "SymbolSeq",
    "Verdict",
    "Word",
    "all_roots",
    "ball_radius",
    "certify_ball",
    "certify_inside",
    "certify_outside",
    "conjugates_in_disk",
    "cumulative_sign",
    "double",
    "double_prime",
    "enumerate_M",
    "g_series",
    "h_series",
    "is_admissible",
    "is_dominant",
    "itinerary_period",
    "itinerary_prefix",
    "leading_root",
    "parry_polynomial",
    "prefix_conditions",
    "reduce_to_fundamental",
    "renormalize",
    "right_limit_itinerary",
    "shift",
    "tent_orbit",
    "test_point",
    "twisted_compare",
    "verify_ghp",
    "zero_run_bound",
]

__version__ = "0.1.0"
