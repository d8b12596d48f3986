"""Exact Verlinde numbers and theta-bundle dimension identities.

Computes dimensions of spaces of theta functions for SL(n) (fixed
determinant) and GL(n) (full) moduli of vector bundles on a genus-g curve,
with every trigonometric value backed by a certified interval enclosure
and an integrality certificate, and mechanically verifies the identities
relating the two families: the transfer law, the level-rank involution,
theta-bundle pullback and rescaling factorizations, and genus-1 closed
forms.
"""

from .checks import (
    CHECK_NAMES,
    CheckFailure,
    CheckReport,
    DeckGroupInfo,
    GridBounds,
    InvolutionTriple,
    bott_szenes_check,
    deck_group,
    duality_dim_check,
    grid_sweep,
    involution,
    theorem1_ledger,
)
from .intervals import (
    DEFAULT_MAX_PRECISION_BITS,
    AmbiguousInterval,
    BigRational,
    CertificationError,
    CertifiedInterval,
    NoIntegerInInterval,
    SineProductTerm,
    certify_integer,
    evaluate_sum,
    pi_enclosure,
    sin_enclosure,
)
from .theta import (
    DegreeMismatch,
    FormalLineClass,
    NonIntegralExponent,
    NotAMultiple,
    PullbackFactorization,
    RootEquation,
    ThetaDescriptor,
    complementary_invariants,
    jacobian_pullback,
    pullback_split,
    theta_rescale,
    theta_translate,
)
from .verlinde import (
    DimResult,
    IntegralityViolation,
    UnsupportedQuery,
    VerlindeQuery,
    beauville_sum,
    elliptic_h0,
    gl_dim,
    jacobian_theta_dim,
    sl_dim,
    symmetric_power_dim,
    verlinde_sum_terms,
)

__all__ = [
    "AmbiguousInterval",
    "BigRational",
    "CHECK_NAMES",
    "CertificationError",
    "CertifiedInterval",
    "CheckFailure",
    "CheckReport",
    "DEFAULT_MAX_PRECISION_BITS",
    "DeckGroupInfo",
    "DegreeMismatch",
    "DimResult",
    "FormalLineClass",
    "GridBounds",
    "IntegralityViolation",
    "InvolutionTriple",
    "NoIntegerInInterval",
    "NonIntegralExponent",
    "NotAMultiple",
    "PullbackFactorization",
    "RootEquation",
    "SineProductTerm",
    "ThetaDescriptor",
    "UnsupportedQuery",
    "VerlindeQuery",
    "beauville_sum",
    "bott_szenes_check",
    "certify_integer",
    "complementary_invariants",
    "deck_group",
    "duality_dim_check",
    "elliptic_h0",
    "evaluate_sum",
    "gl_dim",
    "grid_sweep",
    "involution",
    "jacobian_pullback",
    "jacobian_theta_dim",
    "pi_enclosure",
    "pullback_split",
    "sin_enclosure",
    "sl_dim",
    "symmetric_power_dim",
    "theorem1_ledger",
    "theta_rescale",
    "theta_translate",
    "verlinde_sum_terms",
]
