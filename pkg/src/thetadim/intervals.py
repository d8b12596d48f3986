"""Certified interval arithmetic for trigonometric subset sums.

The kernel encloses sums of the shape

    scale * sum_i  coeff_i * prod_j |2 sin(pi m_ij / M_i)|^(e_ij)

between exact rational bounds.  The enclosures of pi and of the sine values
come from alternating series with explicit tail bounds, evaluated in
fixed-point integer arithmetic with directed rounding, so the bounds are
mathematically rigorous.  An interval of width < 1/2 that contains exactly
one integer is then a proof of that integer value (`certify_integer`).

Endpoints are `fractions.Fraction`; once the sine enclosures are in hand,
all remaining interval arithmetic (products, powers, linear combinations)
is exact, so the only width in a result comes from the sine enclosures and
shrinks as 2**-precision.  `evaluate_sum` doubles the shared working
precision until a caller-supplied width target holds, up to a hard cap.

Everything here is a pure function of its inputs; the per-precision caches
are idempotent write-once tables, so concurrent use is safe.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Sequence

#: Arbitrary-precision rational scalar used for all exact endpoint
#: arithmetic.  `fractions.Fraction` already maintains the invariants we
#: need: positive denominator and gcd-normalized representation.
BigRational = Fraction

_START_BITS = 64
DEFAULT_MAX_PRECISION_BITS = 16384

# Extra working bits beyond the requested precision.  The fixed-point series
# loops accumulate at most a few thousand unit roundings even at the deepest
# precision, so 32 guard bits leave the final width far below 2**(1 - prec).
_GUARD_BITS = 32


class CertificationError(Exception):
    """The precision cap was reached without meeting the width target."""


class NoIntegerInInterval(Exception):
    """The interval is narrow enough to certify but contains no integer.

    Signals a wrong formula or an implementation bug, never a precision
    problem.
    """


class AmbiguousInterval(Exception):
    """More than one integer candidate (or width >= 1/2); refine and retry."""


@dataclass(frozen=True)
class CertifiedInterval:
    """Rational enclosure [lo, hi] of a real quantity.

    `precision_bits` records the working precision that produced the bounds.
    Re-enclosing the same quantity at doubled precision always yields an
    interval contained in the old one (the constructors below intersect with
    the coarser enclosure), so refinement never widens.
    """

    lo: Fraction
    hi: Fraction
    precision_bits: int

    def __post_init__(self):
        if self.lo > self.hi:
            raise ValueError(f"empty interval: lo={self.lo} > hi={self.hi}")
        if self.precision_bits < 1:
            raise ValueError("precision_bits must be positive")

    @property
    def width(self) -> Fraction:
        return self.hi - self.lo

    def contains(self, value) -> bool:
        return self.lo <= value <= self.hi

    def intersect(self, other: "CertifiedInterval") -> "CertifiedInterval":
        """Intersection of two enclosures of the same quantity."""
        lo = max(self.lo, other.lo)
        hi = min(self.hi, other.hi)
        if lo > hi:
            raise ValueError("disjoint intervals cannot enclose the same value")
        return CertifiedInterval(lo, hi, max(self.precision_bits, other.precision_bits))


@dataclass(frozen=True)
class SineProductTerm:
    """The product  prod_j |2 sin(pi m_j / M)|^(e_j)  over one modulus M.

    Offsets are reduced modulo M into (0, M) at construction; the absolute
    value makes this harmless since |sin(pi x / M)| has period M.  An empty
    factor list represents the value 1.
    """

    modulus: int
    factors: tuple[tuple[int, int], ...]

    def __post_init__(self):
        if self.modulus < 1:
            raise ValueError("modulus must be a positive integer")
        reduced = []
        for m, e in self.factors:
            if e < 0:
                raise ValueError("exponents must be nonnegative")
            r = m % self.modulus
            if r == 0:
                raise ValueError(f"offset {m} vanishes modulo {self.modulus}")
            reduced.append((r, e))
        object.__setattr__(self, "factors", tuple(reduced))


# ---------------------------------------------------------------------------
# pi: Machin's formula  pi = 16 arctan(1/5) - 4 arctan(1/239)
# ---------------------------------------------------------------------------

@lru_cache(maxsize=None)
def _arctan_inv_scaled(x: int, work_bits: int) -> tuple[int, int]:
    """Integer bounds with arctan(1/x) in [lo, hi] / 2**work_bits.

    Each term a_k = 1/((2k+1) x^(2k+1)) is enclosed by its floor at the
    working scale, and the alternating tail is below the first term with
    floor zero, so widening by one unit covers it.
    """
    scale = 1 << work_bits
    lo = hi = 0
    power = x  # x**(2k+1)
    k = 0
    positive = True
    while True:
        term = scale // ((2 * k + 1) * power)
        if positive:
            lo += term
            hi += term + 1
        else:
            lo -= term + 1
            hi -= term
        if term == 0:
            return lo - 1, hi + 1
        power *= x * x
        k += 1
        positive = not positive


@lru_cache(maxsize=None)
def _pi_scaled(work_bits: int) -> tuple[int, int]:
    """Integer bounds with pi in [lo, hi] / 2**work_bits."""
    a5_lo, a5_hi = _arctan_inv_scaled(5, work_bits)
    a239_lo, a239_hi = _arctan_inv_scaled(239, work_bits)
    return 16 * a5_lo - 4 * a239_hi, 16 * a5_hi - 4 * a239_lo


@lru_cache(maxsize=None)
def pi_enclosure(precision_bits: int) -> CertifiedInterval:
    """Certified rational enclosure of pi, width <= 2**(1 - precision_bits)."""
    if precision_bits < 1:
        raise ValueError("precision_bits must be positive")
    work = precision_bits + _GUARD_BITS
    lo, hi = _pi_scaled(work)
    iv = CertifiedInterval(Fraction(lo, 1 << work), Fraction(hi, 1 << work), precision_bits)
    if precision_bits > _START_BITS:
        # Nesting by construction: refining never widens.
        iv = iv.intersect(pi_enclosure(precision_bits // 2))
    return iv


# ---------------------------------------------------------------------------
# sin: alternating Taylor series in fixed point
# ---------------------------------------------------------------------------

def _sin_series_scaled(t: Fraction, work_bits: int) -> tuple[int, int]:
    """Integer bounds on sin(t) * 2**work_bits for rational 0 <= t <= 2.

    For t <= 2 the Taylor terms t^(2k+1)/(2k+1)! decrease strictly (the term
    ratio is t^2/((2k+2)(2k+3)) <= 4/6), so the series alternates with a
    tail bounded by the first omitted term.  Terms are propagated by the
    recurrence T_{k+1} = T_k * t^2 / ((2k+2)(2k+3)) with floor/ceil rounding.
    """
    if not 0 <= t <= 2:
        raise ValueError("series argument must lie in [0, 2]")
    num, den = t.numerator, t.denominator
    shifted = num << work_bits
    x_lo = shifted // den
    x_hi = x_lo if shifted % den == 0 else x_lo + 1
    y_lo = (x_lo * x_lo) >> work_bits          # floor of t^2 at scale
    y_hi = -((-(x_hi * x_hi)) >> work_bits)    # ceil of t^2 at scale
    term_lo, term_hi = x_lo, x_hi
    total_lo = total_hi = 0
    k = 0
    positive = True
    while True:
        if positive:
            total_lo += term_lo
            total_hi += term_hi
        else:
            total_lo -= term_hi
            total_hi -= term_lo
        divisor = ((2 * k + 2) * (2 * k + 3)) << work_bits
        next_lo = (term_lo * y_lo) // divisor
        next_hi = -((-(term_hi * y_hi)) // divisor)
        if next_hi <= 1:
            # The next term, hence the whole tail, is below one scaled unit.
            return total_lo - next_hi, total_hi + next_hi
        term_lo, term_hi = next_lo, next_hi
        k += 1
        positive = not positive


@lru_cache(maxsize=None)
def sin_enclosure(m: int, modulus: int, precision_bits: int) -> CertifiedInterval:
    """Certified enclosure of 2*sin(pi*m/modulus) for 0 < m < modulus.

    The width is at most 2**(1 - precision_bits), and doubling the precision
    produces an interval nested inside the previous one.
    """
    if precision_bits < 1:
        raise ValueError("precision_bits must be positive")
    if not 0 < m < modulus:
        raise ValueError(f"offset must satisfy 0 < m < modulus, got m={m}, modulus={modulus}")

    folded = min(m, modulus - m)  # sin(pi - x) = sin(x)
    if 2 * folded == modulus:
        # Exact half turn: 2 sin(pi/2) = 2.
        return CertifiedInterval(Fraction(2), Fraction(2), precision_bits)

    work = precision_bits + _GUARD_BITS
    scale = 1 << work
    pi_lo, pi_hi = _pi_scaled(work)
    # The angle interval [pi_lo, pi_hi] * folded / (modulus * scale) must lie
    # inside (0, pi/2) so that sin is increasing on it; since 2*folded <
    # modulus this only fails for moduli beyond ~2**(work - 2).
    if 2 * folded * pi_hi > modulus * pi_lo:
        raise ValueError("modulus too large for this working precision")
    angle_lo = Fraction(pi_lo * folded, modulus * scale)
    angle_hi = Fraction(pi_hi * folded, modulus * scale)
    sin_lo, _ = _sin_series_scaled(angle_lo, work)
    _, sin_hi = _sin_series_scaled(angle_hi, work)
    iv = CertifiedInterval(Fraction(2 * sin_lo, scale), Fraction(2 * sin_hi, scale), precision_bits)
    if precision_bits > _START_BITS:
        iv = iv.intersect(sin_enclosure(m, modulus, precision_bits // 2))
    return iv


# ---------------------------------------------------------------------------
# exact interval algebra on Fraction endpoints
# ---------------------------------------------------------------------------

def _mul(a: tuple[Fraction, Fraction], b: tuple[Fraction, Fraction]) -> tuple[Fraction, Fraction]:
    products = (a[0] * b[0], a[0] * b[1], a[1] * b[0], a[1] * b[1])
    return min(products), max(products)


def _pow(iv: tuple[Fraction, Fraction], e: int) -> tuple[Fraction, Fraction]:
    lo, hi = iv
    if e == 0:
        return Fraction(1), Fraction(1)
    if lo >= 0:
        return lo**e, hi**e
    if hi <= 0:
        return (hi**e, lo**e) if e % 2 == 0 else (lo**e, hi**e)
    # Straddles zero.
    if e % 2 == 0:
        return Fraction(0), max(-lo, hi) ** e
    return lo**e, hi**e


def _scalar_mul(c: Fraction, iv: tuple[Fraction, Fraction]) -> tuple[Fraction, Fraction]:
    return (c * iv[0], c * iv[1]) if c >= 0 else (c * iv[1], c * iv[0])


def evaluate_sum(
    terms: Iterable[tuple[BigRational, SineProductTerm]],
    scale: BigRational,
    target_width: BigRational,
    *,
    start_bits: int = _START_BITS,
    max_bits: int = DEFAULT_MAX_PRECISION_BITS,
) -> CertifiedInterval:
    """Enclose  scale * sum(coeff * value(term))  to within target_width.

    All sine factors are evaluated at a shared working precision, which
    doubles until the width target holds; exceeding `max_bits` raises
    CertificationError.  An empty term list yields the exact interval [0, 0].
    """
    scale = Fraction(scale)
    target = Fraction(target_width)
    if target <= 0:
        raise ValueError("target_width must be positive")
    if start_bits < 1 or max_bits < 1:
        raise ValueError("precision bounds must be positive")
    prepared: Sequence[tuple[Fraction, SineProductTerm]] = [
        (Fraction(coeff), term) for coeff, term in terms
    ]

    precision = min(start_bits, max_bits)
    while True:
        total_lo = total_hi = Fraction(0)
        for coeff, term in prepared:
            factor_lo, factor_hi = Fraction(1), Fraction(1)
            for m, e in term.factors:
                s = sin_enclosure(m, term.modulus, precision)
                factor_lo, factor_hi = _mul((factor_lo, factor_hi), _pow((s.lo, s.hi), e))
            lo, hi = _scalar_mul(coeff, (factor_lo, factor_hi))
            total_lo += lo
            total_hi += hi
        total_lo, total_hi = _scalar_mul(scale, (total_lo, total_hi))
        if total_hi - total_lo <= target:
            return CertifiedInterval(total_lo, total_hi, precision)
        if precision >= max_bits:
            raise CertificationError(
                f"width {float(total_hi - total_lo):.3g} exceeds target {target} "
                f"at the precision cap ({max_bits} bits)"
            )
        precision = min(2 * precision, max_bits)


def certify_integer(interval: CertifiedInterval) -> int:
    """The unique integer in the interval, provided the width is below 1/2.

    Raises AmbiguousInterval when the width is >= 1/2 (refine and retry) and
    NoIntegerInInterval when the narrow interval misses every integer (which
    means the quantity enclosed is not the integer it was claimed to be).
    """
    if interval.width >= Fraction(1, 2):
        raise AmbiguousInterval(
            f"width {float(interval.width):.3g} >= 1/2; refine before certifying"
        )
    lowest = math.ceil(interval.lo)
    highest = math.floor(interval.hi)
    if lowest > highest:
        raise NoIntegerInInterval(
            f"no integer in [{float(interval.lo):.6f}, {float(interval.hi):.6f}]"
        )
    if lowest < highest:  # unreachable with width < 1/2; kept for clarity
        raise AmbiguousInterval(f"{highest - lowest + 1} integer candidates")
    return lowest
