"""Thurston's construction for a pair of positive multi-twists.

For multicurves ``alpha`` and ``beta`` with geometric intersection matrix
``N``, the product of the two multi-twists is represented by

    [[1, sqrt(mu)], [-sqrt(mu), 1 - mu]],   mu = largest eigenvalue of N N^T,

which has trace ``2 - mu``. The composition is pseudo-Anosov exactly when
this matrix is hyperbolic, i.e. ``mu > 4``, with stretch factor
``(mu - 2 + sqrt(mu^2 - 4 mu)) / 2``.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

from .errors import UnresolvedError
from .interval import RationalEnclosure
from .linalg import (IntegerMatrix, IntegerPolynomial, char_poly, disc_is_isolated, gershgorin_discs,
                     gershgorin_interval, gram, largest_root_enclosure)
from .plumbing import build_family_matrix

__all__ = [
    "PSEUDO_ANOSOV", "ELLIPTIC", "PARABOLIC", "DEFAULT_TOL",
    "ThurstonResult", "FamilyBoundsReport",
    "certified_mu", "thurston_classify", "verify_family_bounds", "g2_closed_form_mu",
    "closed_form_enclosure", "stretch_factors_distinct", "family_bounds", "product_identity_holds",
]

PSEUDO_ANOSOV = "pseudo-Anosov"
ELLIPTIC = "non-pA-elliptic"
PARABOLIC = "non-pA-parabolic"

DEFAULT_TOL = Fraction(1, 10 ** 9)
RETRY_FACTOR = 10 ** 4
MAX_RETRIES = 3


def _sqrt_bits(tol: Fraction) -> int:
    # a few guard bits beyond the requested tolerance
    return max(tol.denominator.bit_length() - tol.numerator.bit_length() + 8, 16)


@dataclass(frozen=True)
class ThurstonResult:
    mu: RationalEnclosure
    classification: str
    trace: RationalEnclosure
    lambda_abs: Optional[RationalEnclosure] = None
    assume_filling: bool = True

    @property
    def is_pseudo_anosov(self) -> bool:
        return self.classification == PSEUDO_ANOSOV

    def lambda_inverse_abs(self) -> Optional[RationalEnclosure]:
        return None if self.lambda_abs is None else self.lambda_abs.reciprocal()

    def signed_stretch(self) -> Optional[tuple[RationalEnclosure, RationalEnclosure]]:
        """Enclosures of the two eigenvalues ``lambda^{+1}, lambda^{-1}`` (both negative)."""
        if self.lambda_abs is None:
            return None
        return -self.lambda_abs, -self.lambda_inverse_abs()


def certified_mu(N: IntegerMatrix, tol=DEFAULT_TOL) -> tuple[RationalEnclosure, IntegerPolynomial]:
    """Enclosure of the largest eigenvalue of ``N N^T`` and its characteristic polynomial."""
    G = gram(N)
    p = char_poly(G)
    upper = gershgorin_interval(gershgorin_discs(G))[1]
    return largest_root_enclosure(p, upper, Fraction(tol)), p


def _lambda_abs(mu: RationalEnclosure, bits: int) -> RationalEnclosure:
    # mu^2 - 4 mu == (mu - 2)^2 - 4; the right-hand form keeps the enclosure tight
    shifted = mu - 2
    disc = shifted.square() - 4
    return (shifted + disc.sqrt(bits)) * Fraction(1, 2)


def thurston_classify(N: IntegerMatrix, tol=DEFAULT_TOL, assume_filling: bool = True) -> ThurstonResult:
    """Classify the product of the two positive multi-twists with intersection matrix ``N``.

    ``assume_filling`` is recorded but not checked: the construction only
    applies when the curves fill the surface and their union is connected.
    """
    if any(x < 0 for row in N for x in row):
        raise ValueError("geometric intersection numbers are nonnegative")
    tol = Fraction(tol)
    for _ in range(MAX_RETRIES + 1):
        mu, p = certified_mu(N, tol)
        if mu.lo > 4:
            bits = _sqrt_bits(tol)
            return ThurstonResult(mu, PSEUDO_ANOSOV, 2 - mu, _lambda_abs(mu, bits), assume_filling)
        if mu.hi < 4:
            return ThurstonResult(mu, ELLIPTIC, 2 - mu, None, assume_filling)
        # the enclosure isolates the largest root, so a root at 4 inside it is mu itself
        if p.squarefree_part()(4) == 0:
            exact = RationalEnclosure.point(4)
            return ThurstonResult(exact, PARABOLIC, 2 - exact, None, assume_filling)
        tol /= RETRY_FACTOR
    raise UnresolvedError(f"cannot separate mu from 4 at tolerance {tol}")


def product_identity_holds() -> bool:
    """Symbolic check that ``((2 - mu)^2 - (mu^2 - 4 mu)) / 4 == 1`` as polynomials in ``mu``."""
    mu = IntegerPolynomial.x()
    return (2 - mu) ** 2 - (mu * mu - 4 * mu) == IntegerPolynomial([4])


def g2_closed_form_mu(n: int) -> tuple[int, int]:
    """Trace and determinant of ``N N^T`` for genus 2; ``mu = (T + sqrt(T^2 - 4D)) / 2``."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    return 3 + 16 * n * n, (4 * n - 1) ** 2


def closed_form_enclosure(T: int, D: int, bits: int = 80) -> RationalEnclosure:
    """Interval evaluation of ``(T + sqrt(T^2 - 4D)) / 2``."""
    disc = RationalEnclosure.point(T * T - 4 * D).sqrt(bits)
    return (disc + T) * Fraction(1, 2)


@dataclass(frozen=True)
class FamilyBoundsReport:
    g: int
    n: int
    mu: RationalEnclosure
    lower_bound: int
    upper_bound: int
    disc_index: int
    isolated_disc_ok: bool

    @property
    def bounds_ok(self) -> bool:
        return self.lower_bound <= self.mu.lo and self.mu.hi <= self.upper_bound


def family_bounds(g: int, n: int, tol=DEFAULT_TOL) -> FamilyBoundsReport:
    """Bound report for any genus ``g >= 2``; see :func:`verify_family_bounds`."""
    N = build_family_matrix(g, n)
    G = gram(N)
    discs = gershgorin_discs(G)
    big = max(range(len(discs)), key=lambda i: discs[i].center)
    mu, _ = certified_mu(N, tol)
    return FamilyBoundsReport(g, n, mu, 16 * n * n - 4 * n, 16 * n * n + 4 * n + 4,
                              big, disc_is_isolated(discs, big))


def verify_family_bounds(g: int, n: int, tol=DEFAULT_TOL) -> FamilyBoundsReport:
    """Check ``16n^2 - 4n <= mu_n <= 16n^2 + 4n + 4`` and the isolation of the big disc."""
    if g < 3:
        raise ValueError("the displayed Gram pattern needs g >= 3")
    if n < 1:
        raise ValueError("the eigenvalue bounds need n >= 1")
    return family_bounds(g, n, tol)


def stretch_factors_distinct(g: int, n_max: int, tol=DEFAULT_TOL) -> tuple[bool, list[RationalEnclosure]]:
    """Certify that ``mu_1, ..., mu_{n_max}`` are pairwise distinct.

    Since ``|lambda|`` is strictly increasing in ``mu`` on ``mu > 4``, the
    stretch factors are then distinct as well. Returns the sorted
    enclosures as witness.
    """
    if n_max < 2:
        raise ValueError("need at least two family members")
    tol = Fraction(tol)
    for _ in range(MAX_RETRIES + 1):
        encs = [certified_mu(build_family_matrix(g, n), tol)[0] for n in range(1, n_max + 1)]
        ordered = sorted(encs, key=lambda e: e.lo)
        if all(a.strictly_below(b) for a, b in zip(ordered, ordered[1:])):
            return True, ordered
        tol /= RETRY_FACTOR
    raise UnresolvedError("mu enclosures could not be separated")
