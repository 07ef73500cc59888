"""Knot invariants read off a Seifert matrix ``A``.

* Alexander polynomial ``det(A - t A^T)``,
* signature of ``A + A^T`` and the Levine-Tristram function,
* homological monodromy ``M = A^{-T} A`` and its order.
"""
from __future__ import annotations

import cmath
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Optional, Sequence, Union

import numpy as np

from .linalg import IntegerMatrix, IntegerPolynomial, char_poly, determinant, inverse_exact, signature_exact
from .plumbing import SeifertMatrix

__all__ = [
    "LaurentPolynomial", "LTSample", "MonodromyData",
    "alexander", "knot_signature", "levine_tristram", "lt_grid", "homological_monodromy",
    "alexander_module_agrees", "fox_milnor_witness", "seifert_forms_equal", "default_order_cap",
    "alexander_raw", "monodromy_matches_alexander",
]

MatrixLike = Union[SeifertMatrix, IntegerMatrix]
DEGENERACY_THRESHOLD = 1e-8


def _as_matrix(A: MatrixLike) -> IntegerMatrix:
    return A.matrix if isinstance(A, SeifertMatrix) else A


class LaurentPolynomial:
    """Integer Laurent polynomial in ``t``; ``coeffs[k]`` multiplies ``t**(low + k)``."""

    __slots__ = ("low", "coeffs")

    def __init__(self, coeffs: Iterable[int], low: int = 0):
        c = [int(a) for a in coeffs]
        while c and c[-1] == 0:
            c.pop()
        while c and c[0] == 0:
            c.pop(0)
            low += 1
        self.coeffs = tuple(c)
        self.low = low if c else 0

    @classmethod
    def from_polynomial(cls, p: IntegerPolynomial) -> LaurentPolynomial:
        return cls(p.coeffs)

    @classmethod
    def from_pairs(cls, pairs: Sequence[Sequence[int]]) -> LaurentPolynomial:
        exps = [int(e) for e, _ in pairs]
        if any(a >= b for a, b in zip(exps, exps[1:])):
            raise ValueError("exponents must be strictly increasing")
        if not pairs:
            return cls([])
        low = exps[0]
        c = [0] * (exps[-1] - low + 1)
        for e, a in pairs:
            c[int(e) - low] = int(a)
        return cls(c, low)

    def to_pairs(self) -> list[tuple[int, int]]:
        return [(self.low + k, a) for k, a in enumerate(self.coeffs) if a]

    @property
    def high(self) -> int:
        return self.low + len(self.coeffs) - 1

    @property
    def span(self) -> int:
        return len(self.coeffs) - 1 if self.coeffs else 0

    def is_zero(self) -> bool:
        return not self.coeffs

    def __eq__(self, other):
        if isinstance(other, LaurentPolynomial):
            return (self.low, self.coeffs) == (other.low, other.coeffs)
        return NotImplemented

    def __hash__(self):
        return hash((self.low, self.coeffs))

    def __repr__(self):
        return f"LaurentPolynomial({self.to_pairs()})"

    def __str__(self):
        if not self.coeffs:
            return "0"
        parts = []
        for e, a in reversed(self.to_pairs()):
            mono = "" if e == 0 else ("t" if e == 1 else f"t^{e}")
            body = mono if mono and abs(a) == 1 else f"{abs(a)}{'*' + mono if mono else ''}"
            parts.append(("-" if a < 0 else "+", body))
        head = ("-" if parts[0][0] == "-" else "") + parts[0][1]
        return head + "".join(f" {s} {b}" for s, b in parts[1:])

    def __mul__(self, other: LaurentPolynomial) -> LaurentPolynomial:
        p = IntegerPolynomial(self.coeffs) * IntegerPolynomial(other.coeffs)
        return LaurentPolynomial(p.coeffs, self.low + other.low)

    def __neg__(self):
        return LaurentPolynomial((-a for a in self.coeffs), self.low)

    def __call__(self, t):
        """Evaluate at ``t``; integer arguments are evaluated exactly as fractions."""
        if isinstance(t, int) and self.low < 0:
            t = Fraction(t)
        value = sum(a * t ** (self.low + k) for k, a in enumerate(self.coeffs))
        if isinstance(value, Fraction) and value.denominator == 1:
            return int(value)
        return value

    def reversed(self) -> LaurentPolynomial:
        """Substitute ``t -> 1/t``."""
        return LaurentPolynomial(reversed(self.coeffs), -self.high) if self.coeffs else self

    def normalized(self) -> LaurentPolynomial:
        """Canonical representative up to the units ``+-t^k``.

        Exponents are centred on 0 (lowest exponent ``-(span // 2)``), and
        the sign makes the value at ``t = 1`` positive, or the leading
        coefficient positive when that value is 0.
        """
        if not self.coeffs:
            return self
        at_one = sum(self.coeffs)
        sign = (1 if at_one > 0 else -1) if at_one else (1 if self.coeffs[-1] > 0 else -1)
        return LaurentPolynomial((sign * a for a in self.coeffs), -(self.span // 2))

    def is_palindromic(self) -> bool:
        return self.coeffs == self.coeffs[::-1]


def _poly_det(m: list[list[IntegerPolynomial]]) -> IntegerPolynomial:
    """Bareiss elimination over ``Z[t]``; every division is exact."""
    m = [list(r) for r in m]
    n, sign, prev = len(m), 1, IntegerPolynomial([1])
    zero = IntegerPolynomial([])
    for k in range(n - 1):
        if m[k][k] == zero:
            for i in range(k + 1, n):
                if m[i][k] != zero:
                    m[k], m[i] = m[i], m[k]
                    sign = -sign
                    break
            else:
                return zero
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]).exact_div(prev)
        prev = m[k][k]
    return m[-1][-1] * sign


def alexander_raw(A: MatrixLike) -> IntegerPolynomial:
    """``det(A - t A^T)`` as an ordinary integer polynomial."""
    A = _as_matrix(A)
    if not A.is_square:
        raise ValueError("Seifert matrix must be square")
    m = [[IntegerPolynomial([A[i, j], -A[j, i]]) for j in range(A.ncols)] for i in range(A.nrows)]
    return _poly_det(m)


def alexander(A: MatrixLike) -> LaurentPolynomial:
    """Normalized Alexander polynomial."""
    return LaurentPolynomial.from_polynomial(alexander_raw(A)).normalized()


def knot_signature(A: MatrixLike) -> int:
    A = _as_matrix(A)
    return signature_exact(A + A.T)


@dataclass(frozen=True)
class LTSample:
    theta: Fraction  # angle as a multiple of pi
    signature: int
    degenerate: bool


def lt_grid(samples: int) -> list[Fraction]:
    """Uniform grid ``k/samples``, ``k = 1..samples``, of angles in (0, pi] as multiples of pi."""
    if samples < 2:
        raise ValueError("need at least two samples")
    return [Fraction(k, samples) for k in range(1, samples + 1)]


def levine_tristram(A: MatrixLike, samples: Sequence) -> list[LTSample]:
    """Signatures of ``(1 - w) A + (1 - conj w) A^T`` at ``w = exp(i pi theta)``.

    ``theta = 1`` is the ordinary signature and is computed exactly.
    """
    A = _as_matrix(A)
    a = np.array(A.tolist(), dtype=float)
    out = []
    for theta in samples:
        theta = Fraction(theta)
        if not 0 < theta <= 1:
            raise ValueError(f"angle {theta}*pi outside (0, pi]")
        if theta == 1:
            out.append(LTSample(theta, knot_signature(A), determinant(A + A.T) == 0))
            continue
        w = cmath.exp(1j * np.pi * float(theta))
        H = (1 - w) * a + (1 - w.conjugate()) * a.T
        ev = np.linalg.eigvalsh(H)
        scale = np.abs(ev).max()
        degenerate = bool(scale == 0 or np.abs(ev).min() < DEGENERACY_THRESHOLD * scale)
        tiny = DEGENERACY_THRESHOLD * scale
        sig = int(np.sum(ev > tiny) - np.sum(ev < -tiny))
        out.append(LTSample(theta, sig, degenerate))
    return out


def default_order_cap(size: int) -> int:
    return 4 * size + 10


@dataclass(frozen=True)
class MonodromyData:
    M: IntegerMatrix
    order: Optional[int]  # None when the order exceeds the cap
    cap: int

    @property
    def order_label(self):
        return self.order if self.order is not None else "exceeds cap"


def homological_monodromy(A: MatrixLike, order_cap: Optional[int] = None) -> MonodromyData:
    """``M = A^{-T} A`` and its order, found by brute-force powers up to ``order_cap``."""
    A = _as_matrix(A)
    if not A.is_square or abs(determinant(A)) != 1:
        raise ValueError("homological monodromy needs a unimodular Seifert matrix")
    cap = default_order_cap(A.nrows) if order_cap is None else order_cap
    if cap < 1:
        raise ValueError("order cap must be positive")
    inv_t = inverse_exact(A.T)
    n = A.nrows
    rows = [[sum(inv_t[i][k] * A[k, j] for k in range(n)) for j in range(n)] for i in range(n)]
    assert all(x.denominator == 1 for r in rows for x in r)
    M = IntegerMatrix([[int(x) for x in r] for r in rows])
    form = A - A.T
    if determinant(M) != 1 or M.T @ form @ M != form:
        raise ArithmeticError("monodromy does not preserve the intersection form")
    eye = IntegerMatrix.identity(n)
    power, order = M, None
    for k in range(1, cap + 1):
        if power == eye:
            order = k
            break
        power = power @ M
    return MonodromyData(M, order, cap)


def alexander_module_agrees(A: MatrixLike, B: MatrixLike, order_cap: Optional[int] = None) -> bool:
    """Equality of the homological monodromies in the common fixed basis."""
    a, b = _as_matrix(A), _as_matrix(B)
    if a.shape != b.shape:
        raise ValueError(f"size mismatch {a.shape} vs {b.shape}")
    return homological_monodromy(a, order_cap).M == homological_monodromy(b, order_cap).M


def fox_milnor_witness(p: LaurentPolynomial, f: LaurentPolynomial) -> bool:
    """Whether ``p`` equals ``f(t) f(1/t)`` up to a unit ``+-t^k``."""
    return p.normalized() == (f * f.reversed()).normalized()


def seifert_forms_equal(A: SeifertMatrix, B: SeifertMatrix) -> bool:
    if A.convention != B.convention:
        raise ValueError("cannot compare Seifert forms under different sign conventions")
    return A.matrix == B.matrix


def monodromy_matches_alexander(A: MatrixLike) -> bool:
    """``char_poly(M)`` agrees with ``det(A - t A^T)`` up to sign."""
    M = homological_monodromy(A).M
    cp = LaurentPolynomial.from_polynomial(char_poly(M)).normalized()
    return cp == alexander(A)
