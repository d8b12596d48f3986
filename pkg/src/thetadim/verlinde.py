"""Dimensions of spaces of theta functions on moduli of vector bundles.

Two families of dimensions are computed for a smooth curve of genus g:

    s(n, d, k)  on the fixed-determinant (SL) moduli space, level k,
    v(n, d, k)  on the full (GL) moduli space, level k,

related by the transfer identity  v * h^g = s * k^g  with h = gcd(n, d).
The SL values come from a certified trigonometric subset sum when the
degree is 0 mod n, from the symmetric-power closed form at genus 1, and
are trivially 1 at rank 1; the remaining regime (genus >= 2 with degree
not 0 mod n) has no formula here and raises UnsupportedQuery rather than
guessing.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from itertools import combinations

from .intervals import (
    DEFAULT_MAX_PRECISION_BITS,
    BigRational,
    SineProductTerm,
    certify_integer,
    evaluate_sum,
)

METHOD_TRIG = "trig-sum"
METHOD_ELLIPTIC = "elliptic-closed-form"
METHOD_TRANSFER = "theorem1-transfer"
METHOD_RANK_ONE = "trivial-rank-one"


class UnsupportedQuery(Exception):
    """The query lies outside the computable range."""


class IntegralityViolation(Exception):
    """The transfer identity produced a non-integer: an implementation bug."""


@dataclass(frozen=True)
class VerlindeQuery:
    """One dimension query: genus, rank, degree, and theta-power level."""

    genus: int
    rank: int
    degree: int
    level: int

    def __post_init__(self):
        if self.genus < 1:
            raise ValueError("genus must be >= 1")
        if self.rank < 1:
            raise ValueError("rank must be >= 1")
        if self.level < 1:
            raise ValueError("level must be >= 1")

    @property
    def h(self) -> int:
        """gcd(rank, degree), with the conventions gcd(n, 0) = n and gcd(n, d) = gcd(n, |d|)."""
        return math.gcd(self.rank, self.degree)

    @property
    def n_bar(self) -> int:
        return self.rank // self.h

    @property
    def d_bar(self) -> int:
        return self.degree // self.h


@dataclass(frozen=True)
class DimResult:
    """A nonnegative integer dimension plus the method that produced it.

    `certified` is True exactly when an interval integrality certificate
    backs the value (directly for trig sums, inherited through the
    transfer); the closed forms are exact by construction and carry False.
    """

    value: int
    method: str
    certified: bool

    def __post_init__(self):
        if self.value < 0:
            raise ValueError("dimension must be nonnegative")


def verlinde_sum_terms(
    g: int, n: int, k: int
) -> tuple[list[tuple[BigRational, SineProductTerm]], BigRational]:
    """Terms and scale of the rank-n, level-k trigonometric sum at genus g.

    The sum runs over the n-element subsets S of {1, .., n+k} in
    lexicographic order; each term is
    prod_{s in S, t not in S} |2 sin(pi (s - t)/(n + k))|^(g-1) and the
    overall scale is (n/(n+k))^g.  This unoptimized enumeration is the
    reference path; symmetry reductions must reproduce it exactly.
    """
    if g < 1 or n < 1 or k < 1:
        raise ValueError("genus, rank and level must all be >= 1")
    modulus = n + k
    universe = range(1, modulus + 1)
    terms = []
    for subset in combinations(universe, n):
        inside = set(subset)
        if g > 1:
            factors = [(s - t, g - 1) for s in subset for t in universe if t not in inside]
        else:
            factors = []  # empty product: every term is 1 at genus 1
        terms.append((Fraction(1), SineProductTerm(modulus, tuple(factors))))
    return terms, Fraction(n, modulus) ** g


@lru_cache(maxsize=None)
def _certified_sum_value(g: int, n: int, k: int, max_bits: int) -> int:
    terms, scale = verlinde_sum_terms(g, n, k)
    enclosure = evaluate_sum(terms, scale, Fraction(1, 4), max_bits=max_bits)
    return certify_integer(enclosure)


def beauville_sum(
    g: int, n: int, k: int, *, max_precision_bits: int = DEFAULT_MAX_PRECISION_BITS
) -> DimResult:
    """Certified integer value of the trigonometric subset sum.

    This is the level-k dimension on the fixed-determinant moduli space of
    rank n and degree 0 mod n.
    """
    return DimResult(_certified_sum_value(g, n, k, max_precision_bits), METHOD_TRIG, True)


def symmetric_power_dim(m: int, k: int) -> int:
    """Dimension C(m+k-1, k) of the k-th symmetric power of an m-dim space."""
    if m < 0 or k < 0:
        raise ValueError("arguments must be nonnegative")
    if k == 0:
        return 1
    if m == 0:
        return 0
    return math.comb(m + k - 1, k)


def sl_dim(
    query: VerlindeQuery, *, max_precision_bits: int = DEFAULT_MAX_PRECISION_BITS
) -> DimResult:
    """Dimension of level-k theta functions on the fixed-determinant space.

    Dispatch: rank 1 is a point; degree 0 mod rank goes through the
    certified trigonometric sum (twisting by an n-th power of a line bundle
    reduces the degree to 0 without moving the theta bundle); genus 1 has
    the symmetric-power closed form; anything else raises UnsupportedQuery.
    """
    if query.rank == 1:
        return DimResult(1, METHOD_RANK_ONE, False)
    if query.degree % query.rank == 0:
        return beauville_sum(
            query.genus, query.rank, query.level, max_precision_bits=max_precision_bits
        )
    if query.genus == 1:
        return DimResult(symmetric_power_dim(query.h, query.level), METHOD_ELLIPTIC, False)
    raise UnsupportedQuery("degree not ≡ 0 mod rank at genus ≥ 2")


def gl_dim(
    query: VerlindeQuery, *, max_precision_bits: int = DEFAULT_MAX_PRECISION_BITS
) -> DimResult:
    """Full-moduli dimension via the transfer identity v = s * (k/h)^g.

    The transfer always yields an integer; a remainder would falsify the
    implementation, so it raises IntegralityViolation rather than rounding.
    """
    s = sl_dim(query, max_precision_bits=max_precision_bits)
    numerator = s.value * query.level**query.genus
    denominator = query.h**query.genus
    value, remainder = divmod(numerator, denominator)
    if remainder:
        raise IntegralityViolation(
            f"h^g = {denominator} does not divide s*k^g = {numerator} for {query}"
        )
    return DimResult(value, METHOD_TRANSFER, s.certified)


def jacobian_theta_dim(g: int, m: int) -> int:
    """h^0 of the m-th power of a principal theta bundle on a g-dim Jacobian: m^g."""
    if g < 1:
        raise ValueError("genus must be >= 1")
    if m < 1:
        raise ValueError("theta power must be >= 1")
    return m**g


def elliptic_h0(e: int) -> int:
    """h^0 of a degree-e line bundle on a genus-1 curve, for e >= 1.

    Nonpositive degrees are rejected: there h^0 depends on more than the
    degree (1 for the trivial bundle at e = 0, else 0).
    """
    if e < 1:
        raise ValueError("degree must be >= 1")
    return e
