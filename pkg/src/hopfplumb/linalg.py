"""Exact integer and rational matrix kernels.

Everything here runs on Python integers and :class:`fractions.Fraction`;
no floating-point value enters any result.
"""
from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

from .errors import NoRealRootError
from .interval import RationalEnclosure

__all__ = [
    "IntegerMatrix", "IntegerPolynomial", "GershgorinDisc",
    "gram", "determinant", "char_poly", "gershgorin_discs", "gershgorin_interval",
    "disc_is_isolated", "largest_root_enclosure", "signature_exact",
    "inverse_exact", "load_matrix", "dump_matrix",
]


def _check_int(x) -> int:
    # bool is an int subclass; reject it so that JSON true/false never passes
    if isinstance(x, bool) or not isinstance(x, int):
        raise TypeError(f"matrix entries must be integers, got {x!r}")
    return x


class IntegerMatrix:
    """Dense immutable matrix of arbitrary-precision integers."""

    __slots__ = ("rows",)

    def __init__(self, rows: Iterable[Iterable[int]]):
        rows = tuple(tuple(_check_int(x) for x in row) for row in rows)
        if not rows or not rows[0]:
            raise ValueError("empty matrices are not supported")
        width = len(rows[0])
        for r in rows:
            if len(r) != width:
                raise ValueError("matrix rows have unequal lengths")
        self.rows = rows

    @classmethod
    def identity(cls, k: int) -> IntegerMatrix:
        return cls([[int(i == j) for j in range(k)] for i in range(k)])

    @classmethod
    def zeros(cls, m: int, n: int | None = None) -> IntegerMatrix:
        return cls([[0] * (m if n is None else n) for _ in range(m)])

    @property
    def nrows(self) -> int:
        return len(self.rows)

    @property
    def ncols(self) -> int:
        return len(self.rows[0])

    @property
    def shape(self) -> tuple[int, int]:
        return self.nrows, self.ncols

    @property
    def is_square(self) -> bool:
        return self.nrows == self.ncols

    @property
    def T(self) -> IntegerMatrix:
        return IntegerMatrix(zip(*self.rows))

    def is_symmetric(self) -> bool:
        return self.is_square and self.rows == self.T.rows

    def __getitem__(self, ij):
        i, j = ij
        return self.rows[i][j]

    def __iter__(self):
        return iter(self.rows)

    def __eq__(self, other):
        if isinstance(other, IntegerMatrix):
            return self.rows == other.rows
        return NotImplemented

    def __hash__(self):
        return hash(self.rows)

    def __repr__(self):
        return f"IntegerMatrix({[list(r) for r in self.rows]})"

    def tolist(self) -> list[list[int]]:
        return [list(r) for r in self.rows]

    def _same_shape(self, other: IntegerMatrix):
        if self.shape != other.shape:
            raise ValueError(f"shape mismatch {self.shape} vs {other.shape}")

    def __add__(self, other: IntegerMatrix) -> IntegerMatrix:
        self._same_shape(other)
        return IntegerMatrix([[a + b for a, b in zip(r, s)] for r, s in zip(self.rows, other.rows)])

    def __sub__(self, other: IntegerMatrix) -> IntegerMatrix:
        self._same_shape(other)
        return IntegerMatrix([[a - b for a, b in zip(r, s)] for r, s in zip(self.rows, other.rows)])

    def __neg__(self) -> IntegerMatrix:
        return IntegerMatrix([[-a for a in r] for r in self.rows])

    def scale(self, k: int) -> IntegerMatrix:
        return IntegerMatrix([[k * a for a in r] for r in self.rows])

    def __matmul__(self, other):
        if isinstance(other, IntegerMatrix):
            if self.ncols != other.nrows:
                raise ValueError(f"cannot multiply {self.shape} by {other.shape}")
            cols = other.T.rows
            return IntegerMatrix([[sum(a * b for a, b in zip(r, c)) for c in cols] for r in self.rows])
        # vector
        v = tuple(other)
        if len(v) != self.ncols:
            raise ValueError("vector length does not match matrix")
        return tuple(sum(a * b for a, b in zip(r, v)) for r in self.rows)

    def __pow__(self, k: int) -> IntegerMatrix:
        if not self.is_square or k < 0:
            raise ValueError("matrix powers need a square matrix and k >= 0")
        result, base = IntegerMatrix.identity(self.nrows), self
        while k:
            if k & 1:
                result = result @ base
            base = base @ base
            k >>= 1
        return result

    def permuted(self, perm: Sequence[int]) -> IntegerMatrix:
        """Simultaneous row/column reordering: entry (i, j) becomes A[perm[i], perm[j]]."""
        return IntegerMatrix([[self.rows[p][q] for q in perm] for p in perm])


class IntegerPolynomial:
    """Univariate integer polynomial; ``coeffs[k]`` multiplies ``x**k``."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[int]):
        c = [_check_int(a) for a in coeffs]
        while c and c[-1] == 0:
            c.pop()
        self.coeffs = tuple(c)

    @classmethod
    def x(cls) -> IntegerPolynomial:
        return cls([0, 1])

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1  # -1 for the zero polynomial

    @property
    def leading(self) -> int:
        return self.coeffs[-1] if self.coeffs else 0

    def __eq__(self, other):
        if isinstance(other, IntegerPolynomial):
            return self.coeffs == other.coeffs
        if isinstance(other, int):
            return self.coeffs == IntegerPolynomial([other]).coeffs
        return NotImplemented

    def __hash__(self):
        return hash(self.coeffs)

    def __repr__(self):
        return f"IntegerPolynomial({list(self.coeffs)})"

    def __str__(self):
        if not self.coeffs:
            return "0"
        terms = []
        for k in range(self.degree, -1, -1):
            a = self.coeffs[k]
            if a == 0:
                continue
            mono = "" if k == 0 else ("x" if k == 1 else f"x^{k}")
            if mono and abs(a) == 1:
                body = mono
            else:
                body = f"{abs(a)}{'*' + mono if mono else ''}"
            terms.append(("-" if a < 0 else "+", body))
        head = ("-" if terms[0][0] == "-" else "") + terms[0][1]
        return head + "".join(f" {s} {b}" for s, b in terms[1:])

    def __call__(self, x):
        acc = 0
        for a in reversed(self.coeffs):
            acc = acc * x + a
        return acc

    def __add__(self, other):
        other = _poly(other)
        n = max(len(self.coeffs), len(other.coeffs))
        a = self.coeffs + (0,) * (n - len(self.coeffs))
        b = other.coeffs + (0,) * (n - len(other.coeffs))
        return IntegerPolynomial(x + y for x, y in zip(a, b))

    __radd__ = __add__

    def __neg__(self):
        return IntegerPolynomial(-a for a in self.coeffs)

    def __sub__(self, other):
        return self + (-_poly(other))

    def __rsub__(self, other):
        return _poly(other) - self

    def __mul__(self, other):
        other = _poly(other)
        if not self.coeffs or not other.coeffs:
            return IntegerPolynomial([])
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    out[i + j] += a * b
        return IntegerPolynomial(out)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        out = IntegerPolynomial([1])
        for _ in range(k):
            out = out * self
        return out

    def derivative(self) -> IntegerPolynomial:
        return IntegerPolynomial(k * a for k, a in enumerate(self.coeffs) if k)

    def content(self) -> int:
        from math import gcd
        g = 0
        for a in self.coeffs:
            g = gcd(g, a)
        return g

    def primitive(self) -> IntegerPolynomial:
        """Divide out the content; leading coefficient made positive."""
        g = self.content()
        if g == 0:
            return self
        if self.leading < 0:
            g = -g
        return IntegerPolynomial(a // g for a in self.coeffs)

    def exact_div(self, other: IntegerPolynomial) -> IntegerPolynomial:
        q, r = _rdivmod(_rat(self), _rat(other))
        if r or any(c.denominator != 1 for c in q):
            raise ArithmeticError(f"{other} does not divide {self} over the integers")
        return IntegerPolynomial(int(c) for c in q)

    def gcd(self, other: IntegerPolynomial) -> IntegerPolynomial:
        """Primitive gcd over the rationals (monic up to content)."""
        a, b = _rat(self), _rat(other)
        while b:
            a, b = b, _rdivmod(a, b)[1]
        if not a:
            return IntegerPolynomial([])
        return _from_rat(a).primitive()

    def squarefree_part(self) -> IntegerPolynomial:
        if self.degree <= 0:
            return self.primitive()
        return self.primitive().exact_div(self.gcd(self.derivative())).primitive()


def _poly(p) -> IntegerPolynomial:
    return p if isinstance(p, IntegerPolynomial) else IntegerPolynomial([p])


# Rational polynomials as coefficient lists (low degree first), trailing zeros stripped.

def _rat(p: IntegerPolynomial) -> list[Fraction]:
    return [Fraction(a) for a in p.coeffs]


def _strip(c: list) -> list:
    while c and c[-1] == 0:
        c.pop()
    return c


def _from_rat(c: list[Fraction]) -> IntegerPolynomial:
    from math import lcm
    den = 1
    for a in c:
        den = lcm(den, a.denominator)
    return IntegerPolynomial(int(a * den) for a in c)


def _rdivmod(a: list[Fraction], b: list[Fraction]) -> tuple[list[Fraction], list[Fraction]]:
    a, b = _strip(list(a)), _strip(list(b))
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    q = [Fraction(0)] * max(len(a) - len(b) + 1, 0)
    lead = b[-1]
    while len(a) >= len(b):
        f = a[-1] / lead
        shift = len(a) - len(b)
        q[shift] = f
        for i, bi in enumerate(b):
            a[shift + i] -= f * bi
        a.pop()
        _strip(a)
    return _strip(q), a


def _reval(c: list[Fraction], x: Fraction) -> Fraction:
    acc = Fraction(0)
    for a in reversed(c):
        acc = acc * x + a
    return acc


# matrices

def gram(N: IntegerMatrix) -> IntegerMatrix:
    """Return ``N @ N.T``."""
    return IntegerMatrix([[sum(a * b for a, b in zip(r, s)) for s in N.rows] for r in N.rows])


def _require_square(A: IntegerMatrix):
    if not A.is_square:
        raise ValueError(f"square matrix required, got shape {A.shape}")


def determinant(A: IntegerMatrix) -> int:
    """Exact determinant by fraction-free (Bareiss) elimination."""
    _require_square(A)
    m = [list(r) for r in A.rows]
    n, sign, prev = len(m), 1, 1
    for k in range(n - 1):
        if m[k][k] == 0:
            for i in range(k + 1, n):
                if m[i][k]:
                    m[k], m[i] = m[i], m[k]
                    sign = -sign
                    break
            else:
                return 0
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) // prev
        prev = m[k][k]
    return sign * m[-1][-1]


def char_poly(A: IntegerMatrix) -> IntegerPolynomial:
    """``det(x I - A)`` via the Faddeev-LeVerrier recursion.

    The divisions by ``k`` in the recursion are exact over the integers.
    """
    _require_square(A)
    n = A.nrows
    coeffs = [0] * (n + 1)
    coeffs[n] = 1
    eye = IntegerMatrix.identity(n)
    M = IntegerMatrix.zeros(n)
    for k in range(1, n + 1):
        M = A @ M + eye.scale(coeffs[n - k + 1])
        AM = A @ M
        tr = sum(AM[i, i] for i in range(n))
        assert tr % k == 0
        coeffs[n - k] = -tr // k
    return IntegerPolynomial(coeffs)


def inverse_exact(A: IntegerMatrix) -> list[list[Fraction]]:
    """Rational inverse by Gauss-Jordan elimination."""
    _require_square(A)
    n = A.nrows
    m = [[Fraction(x) for x in row] + [Fraction(int(i == j)) for j in range(n)]
         for i, row in enumerate(A.rows)]
    for k in range(n):
        p = next((i for i in range(k, n) if m[i][k] != 0), None)
        if p is None:
            raise ZeroDivisionError("singular matrix")
        m[k], m[p] = m[p], m[k]
        piv = m[k][k]
        m[k] = [x / piv for x in m[k]]
        for i in range(n):
            if i != k and m[i][k] != 0:
                f = m[i][k]
                m[i] = [x - f * y for x, y in zip(m[i], m[k])]
    return [row[n:] for row in m]


# Gershgorin

@dataclass(frozen=True)
class GershgorinDisc:
    center: int
    radius: int
    index: int

    @property
    def lo(self) -> int:
        return self.center - self.radius

    @property
    def hi(self) -> int:
        return self.center + self.radius


def gershgorin_discs(A: IntegerMatrix) -> list[GershgorinDisc]:
    _require_square(A)
    return [GershgorinDisc(row[i], sum(abs(x) for j, x in enumerate(row) if j != i), i)
            for i, row in enumerate(A.rows)]


def gershgorin_interval(discs: Sequence[GershgorinDisc]) -> tuple[int, int]:
    """Real interval covering every disc: ``(min(c - r), max(c + r))``."""
    return min(d.lo for d in discs), max(d.hi for d in discs)


def disc_is_isolated(discs: Sequence[GershgorinDisc], i: int) -> bool:
    """Whether disc ``i`` is disjoint from all others, as intervals on the real line."""
    if not 0 <= i < len(discs):
        raise IndexError(f"disc index {i} out of range")
    d = discs[i]
    return all(e.hi < d.lo or d.hi < e.lo for k, e in enumerate(discs) if k != i)


# certified roots

def _sturm(p: list[Fraction]) -> list[list[Fraction]]:
    seq = [p, _strip([k * a for k, a in enumerate(p)][1:])]
    while seq[-1]:
        r = _rdivmod(seq[-2], seq[-1])[1]
        if not r:
            break
        seq.append([-a for a in r])
    return [s for s in seq if s]


def _sign_changes(seq: list[list[Fraction]], x: Fraction) -> int:
    signs = [v for v in (_reval(s, x) for s in seq) if v != 0]
    return sum(1 for a, b in zip(signs, signs[1:]) if (a < 0) != (b < 0))


def _cauchy_bound(p: IntegerPolynomial) -> Fraction:
    lead = abs(p.leading)
    return 1 + Fraction(max((abs(a) for a in p.coeffs[:-1]), default=0), lead)


def largest_root_enclosure(p: IntegerPolynomial, search_hi, tol) -> RationalEnclosure:
    """Certified enclosure of the largest real root of ``p`` not exceeding ``search_hi``.

    Works on the square-free part of ``p``. Sturm sequences count roots, so
    the returned interval holds exactly one root of the square-free part,
    that root is the largest one ``<= search_hi``, and the square-free part
    changes sign across the interval (or the interval is a single exact root).

    Raises :class:`NoRealRootError` when no real root lies at or below
    ``search_hi``.
    """
    search_hi, tol = Fraction(search_hi), Fraction(tol)
    if tol <= 0:
        raise ValueError("tolerance must be positive")
    if p.degree < 1:
        raise NoRealRootError(f"constant polynomial {p} has no roots")
    q = p.squarefree_part()
    qr = _rat(q)
    if _reval(qr, search_hi) == 0:
        return RationalEnclosure.point(search_hi)
    lo = -_cauchy_bound(q) - 1
    hi = search_hi
    if lo >= hi:
        raise NoRealRootError(f"no real root of {p} at or below {search_hi}")
    seq = _sturm(qr)
    v_hi = _sign_changes(seq, hi)
    v_lo = _sign_changes(seq, lo)
    if v_lo - v_hi == 0:
        raise NoRealRootError(f"no real root of {p} at or below {search_hi}")
    # invariant: q(lo) != 0, q(hi) != 0, largest root <= search_hi is in (lo, hi)
    while True:
        count = v_lo - v_hi
        if count == 1 and hi - lo <= tol:
            return RationalEnclosure(lo, hi)
        mid = _split_point(qr, lo, hi)
        v_mid = _sign_changes(seq, mid)
        if v_mid - v_hi >= 1:
            lo, v_lo = mid, v_mid
        else:
            hi, v_hi = mid, v_mid


def _split_point(qr: list[Fraction], lo: Fraction, hi: Fraction) -> Fraction:
    # q has finitely many rational roots, so some dyadic offset avoids them
    k = 1
    while True:
        mid = lo + (hi - lo) * (Fraction(1, 2) + (Fraction(1, 2 ** (k + 1)) if k > 1 else 0))
        if _reval(qr, mid) != 0:
            return mid
        k += 1


# signature

def signature_exact(S: IntegerMatrix) -> int:
    """Signature of a symmetric integer matrix by rational congruence diagonalization."""
    if not S.is_symmetric():
        raise ValueError("signature requires a symmetric matrix")
    m = [[Fraction(x) for x in row] for row in S.rows]
    sig = 0
    while m:
        n = len(m)
        p = next((i for i in range(n) if m[i][i] != 0), None)
        if p is not None:
            piv = m[p][p]
            sig += 1 if piv > 0 else -1
            rest = [i for i in range(n) if i != p]
            m = [[m[i][j] - m[i][p] * m[p][j] / piv for j in rest] for i in rest]
            continue
        pair = next(((i, j) for i in range(n) for j in range(i + 1, n) if m[i][j] != 0), None)
        if pair is None:
            break
        # zero diagonal: eliminate the hyperbolic block [[0, b], [b, 0]], which contributes 0
        i, j = pair
        b = m[i][j]
        rest = [k for k in range(n) if k not in pair]
        # Schur complement with inverse block [[0, 1/b], [1/b, 0]]
        m = [[m[r][c] - (m[r][i] * m[j][c] + m[r][j] * m[i][c]) / b for c in rest] for r in rest]
    return sig


# file format

def load_matrix(source) -> IntegerMatrix:
    """Parse ``{"rows": [[...], ...]}`` from a path, file object, or already-decoded dict."""
    if isinstance(source, dict):
        obj = source
    elif hasattr(source, "read"):
        obj = json.load(source)
    else:
        with open(source) as fh:
            obj = json.load(fh)
    if not isinstance(obj, dict) or "rows" not in obj:
        raise ValueError('matrix file must be an object with a "rows" field')
    rows = obj["rows"]
    if not isinstance(rows, list) or not all(isinstance(r, list) for r in rows):
        raise ValueError('"rows" must be an array of arrays')
    return IntegerMatrix(rows)


def dump_matrix(A: IntegerMatrix) -> str:
    return json.dumps({"rows": A.tolist()})
