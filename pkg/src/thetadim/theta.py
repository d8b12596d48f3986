"""Symbolic calculus of theta bundles on moduli of vector bundles.

Line bundles are modeled as elements of the free abelian group on named
symbols ("L1", "detF", ...), each symbol carrying an integer degree on the
curve; the total degree is then a group homomorphism.  A theta bundle on a
full moduli space is determined by the rank of its twisting bundle together
with the formal class of its determinant, and the identities implemented
here are pure exponent bookkeeping on these data:

  * complementary invariants: the (rank, degree) a twisting bundle must
    have so that its Euler pairing with the moduli space vanishes;
  * rescaling: theta bundles for twisting bundles of proportional rank
    differ by a power and a determinant-pullback twist;
  * translation: twisting by a degree-0 line bundle only contributes a
    determinant-pullback twist;
  * pullback along the tensor-product map, which splits into an outer
    power on the fixed-determinant factor and a theta bundle on the other
    factor; specializing the second factor to the Jacobian gives the
    power n^2/h together with an n-th root constraint.

Torsion relations are deliberately absent (the group is free); n-th roots
are therefore reported as constraint equations instead of being extracted.
All values are immutable and all operations pure.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Mapping, Optional


class NotAMultiple(Exception):
    """Rescaling requires the first rank to be a multiple of the second."""


class NonIntegralExponent(Exception):
    """The pullback exponent is not an integer: inconsistent inputs."""


class DegreeMismatch(Exception):
    """A degree constraint on formal line classes is violated."""


class FormalLineClass:
    """Element of the free abelian group on named line-bundle symbols.

    The canonical form drops zero exponents and keeps degrees only for the
    symbols present, so structural equality decides identity.  Missing
    degrees default to 0.
    """

    __slots__ = ("_exponents", "_degrees")

    def __init__(
        self,
        exponents: Optional[Mapping[str, int]] = None,
        degrees: Optional[Mapping[str, int]] = None,
    ):
        exponents = dict(exponents or {})
        degrees = dict(degrees or {})
        kept = {name: e for name, e in exponents.items() if e != 0}
        self._exponents = tuple(sorted(kept.items()))
        self._degrees = tuple(sorted((name, int(degrees.get(name, 0))) for name in kept))

    @classmethod
    def identity(cls) -> "FormalLineClass":
        """The class of the trivial bundle."""
        return cls()

    @classmethod
    def symbol(cls, name: str, degree: int = 0, power: int = 1) -> "FormalLineClass":
        return cls({name: power}, {name: degree})

    @property
    def exponents(self) -> dict[str, int]:
        return dict(self._exponents)

    @property
    def degree_table(self) -> dict[str, int]:
        return dict(self._degrees)

    @property
    def degree(self) -> int:
        """Total degree: the group homomorphism sum(exponent * degree(symbol))."""
        degrees = dict(self._degrees)
        return sum(e * degrees[name] for name, e in self._exponents)

    def is_identity(self) -> bool:
        return not self._exponents

    def __mul__(self, other: "FormalLineClass") -> "FormalLineClass":
        if not isinstance(other, FormalLineClass):
            return NotImplemented
        degrees = dict(self._degrees)
        for name, d in other._degrees:
            if name in degrees and degrees[name] != d:
                raise ValueError(f"conflicting degrees for symbol {name!r}")
            degrees[name] = d
        exponents = dict(self._exponents)
        for name, e in other._exponents:
            exponents[name] = exponents.get(name, 0) + e
        return FormalLineClass(exponents, degrees)

    def __pow__(self, e: int) -> "FormalLineClass":
        return FormalLineClass({name: x * e for name, x in self._exponents}, dict(self._degrees))

    def __eq__(self, other) -> bool:
        if not isinstance(other, FormalLineClass):
            return NotImplemented
        return self._exponents == other._exponents and self._degrees == other._degrees

    def __hash__(self) -> int:
        return hash((self._exponents, self._degrees))

    def format(self, explicit_exponents: bool = False) -> str:
        """Dotted rendering, symbols sorted by name: ``L1^1.detF^2``.

        The compact form (default) drops exponent 1; the identity prints as
        ``O`` either way.
        """
        if not self._exponents:
            return "O"
        parts = []
        for name, e in self._exponents:
            if e == 1 and not explicit_exponents:
                parts.append(name)
            else:
                parts.append(f"{name}^{e}")
        return ".".join(parts)

    def __str__(self) -> str:
        return self.format()

    def __repr__(self) -> str:
        return f"FormalLineClass({self.format(explicit_exponents=True)!r})"


@dataclass(frozen=True)
class ThetaDescriptor:
    """A theta bundle on a full moduli space: rank and determinant class of
    the twisting bundle, which determine it completely."""

    rank: int
    det: FormalLineClass

    def __post_init__(self):
        if self.rank < 1:
            raise ValueError("rank must be >= 1")


@dataclass(frozen=True)
class PullbackFactorization:
    """The split  theta^c  [outer product]  theta_descriptor  of a pullback."""

    left_exponent: int
    right_descriptor: ThetaDescriptor

    def __post_init__(self):
        if self.left_exponent < 1:
            raise ValueError("left exponent must be >= 1")


@dataclass(frozen=True)
class RootEquation:
    """Constraint  N^power = rhs  defining an n-th root of degree root_degree.

    Root extraction is not unique in a free group, so the equation is
    reported instead of a chosen root.
    """

    power: int
    rhs: FormalLineClass
    root_degree: int

    def __str__(self) -> str:
        return f"N^{self.power} = {self.rhs}"


def complementary_invariants(g: int, n: int, d: int, k: int) -> tuple[int, int]:
    """Rank and degree of a complementary twisting bundle.

    With h = gcd(n, d), n = h*nbar, d = h*dbar, the k-th complementary
    invariants are (k*nbar, k*(nbar*(g-1) - dbar)); the Euler pairing
    n*d_F + n_F*(d - n*(g-1)) then vanishes identically.
    """
    if g < 1 or n < 1 or k < 1:
        raise ValueError("genus, rank and multiplier must all be >= 1")
    h = math.gcd(n, d)
    n_bar, d_bar = n // h, d // h
    rank = k * n_bar
    degree = k * (n_bar * (g - 1) - d_bar)
    assert n * degree + rank * (d - n * (g - 1)) == 0
    return rank, degree


def theta_rescale(F: ThetaDescriptor, F0: ThetaDescriptor) -> tuple[int, FormalLineClass]:
    """Express theta_F through theta_F0 when rk F = a * rk F0.

    Returns (a, twist) with  theta_F = theta_F0^a  tensor  det-pullback of
    twist = det F * (det F0)^(-a).
    """
    if F.rank % F0.rank:
        raise NotAMultiple(f"rank {F.rank} is not a multiple of rank {F0.rank}")
    a = F.rank // F0.rank
    return a, F.det * F0.det**-a


def theta_translate(
    F: ThetaDescriptor, twist_class: FormalLineClass
) -> tuple[ThetaDescriptor, FormalLineClass]:
    """Twisting the bundle by a degree-0 class M moves theta by det* M^(rk F).

    Returns (F, M^(rk F)); the base descriptor is unchanged.
    """
    if twist_class.degree != 0:
        raise DegreeMismatch(
            f"translation requires a degree-0 class, got degree {twist_class.degree}"
        )
    return F, twist_class**F.rank


def pullback_split(
    n1: int, d1: int, n2: int, F: ThetaDescriptor, L1: FormalLineClass
) -> PullbackFactorization:
    """Split the pullback of theta_F along the tensor-product map.

    The fixed-determinant factor (rank n1, determinant class L1) receives
    theta^c with c = n2 * rk F / (n1 / gcd(n1, d1)); the other factor
    receives the theta bundle of rank n1 * rk F and determinant
    L1^(rk F) * (det F)^n1.
    """
    if n1 < 1 or n2 < 1:
        raise ValueError("ranks must be >= 1")
    minimal_rank = n1 // math.gcd(n1, d1)
    numerator = n2 * F.rank
    if numerator % minimal_rank:
        raise NonIntegralExponent(
            f"{numerator} is not divisible by the minimal complementary rank {minimal_rank}"
        )
    right = ThetaDescriptor(n1 * F.rank, L1**F.rank * F.det**n1)
    return PullbackFactorization(numerator // minimal_rank, right)


def jacobian_pullback(
    g: int, n: int, d: int, L: FormalLineClass, detF: FormalLineClass
) -> tuple[int, RootEquation]:
    """Pullback exponent and root constraint for the Jacobian factor.

    Along tensoring with degree-0 line bundles, the theta bundle pulls back
    to theta (outer) theta_N^(n^2/h), where N is any n-th root of
    L * (det F)^h; such a root has degree g-1.  The degree consistency
    n*(g-1) = deg(L * (det F)^h) is checked and must hold.
    """
    if g < 1 or n < 1:
        raise ValueError("genus and rank must be >= 1")
    h = math.gcd(n, d)
    constraint = L * detF**h
    expected = n * (g - 1)
    if constraint.degree != expected:
        raise DegreeMismatch(
            f"constraint class has degree {constraint.degree}, expected n(g-1) = {expected}"
        )
    return n * n // h, RootEquation(power=n, rhs=constraint, root_degree=g - 1)
