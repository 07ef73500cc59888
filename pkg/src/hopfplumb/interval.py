"""Closed intervals with exact rational endpoints.

All operations round outward, so the result of an expression evaluated on
enclosures always contains the exact value of that expression.
"""
from __future__ import annotations

from dataclasses import dataclass
from decimal import ROUND_CEILING, ROUND_FLOOR, Context, Decimal
from fractions import Fraction
from math import isqrt
from numbers import Rational

__all__ = ["RationalEnclosure", "sqrt_bounds", "decimal_string"]


def _q(x) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, (int, Rational)):
        return Fraction(x)
    if isinstance(x, str):
        return Fraction(x)
    raise TypeError(f"expected an exact rational, got {type(x).__name__}")


def sqrt_bounds(x, bits: int) -> tuple[Fraction, Fraction]:
    """Rational bounds ``lo <= sqrt(x) <= hi`` with ``hi - lo <= 2**-bits``."""
    x = _q(x)
    if x < 0:
        raise ValueError("square root of a negative number")
    scale = 1 << bits
    # floor(sqrt(x) * scale) == isqrt(floor(x * scale**2))
    r = isqrt((x.numerator * scale * scale) // x.denominator)
    lo = Fraction(r, scale)
    hi = lo if lo * lo == x else Fraction(r + 1, scale)
    return lo, hi


def decimal_string(x: Fraction, digits: int = 15, rounding=ROUND_FLOOR) -> str:
    ctx = Context(prec=digits, rounding=rounding)
    d = ctx.divide(Decimal(x.numerator), Decimal(x.denominator))
    return format(d, "f") if abs(d.adjusted()) < digits else str(d)


@dataclass(frozen=True)
class RationalEnclosure:
    lo: Fraction
    hi: Fraction

    def __post_init__(self):
        object.__setattr__(self, "lo", _q(self.lo))
        object.__setattr__(self, "hi", _q(self.hi))
        if self.lo > self.hi:
            raise ValueError(f"empty enclosure [{self.lo}, {self.hi}]")

    @classmethod
    def point(cls, x) -> RationalEnclosure:
        return cls(x, x)

    @classmethod
    def coerce(cls, x) -> RationalEnclosure:
        return x if isinstance(x, cls) else cls.point(x)

    @property
    def width(self) -> Fraction:
        return self.hi - self.lo

    @property
    def mid(self) -> Fraction:
        return (self.lo + self.hi) / 2

    @property
    def is_point(self) -> bool:
        return self.lo == self.hi

    def __contains__(self, x) -> bool:
        if isinstance(x, RationalEnclosure):
            return self.lo <= x.lo and x.hi <= self.hi
        return self.lo <= _q(x) <= self.hi

    def overlaps(self, other: RationalEnclosure) -> bool:
        return not (self.hi < other.lo or other.hi < self.lo)

    def strictly_below(self, other: RationalEnclosure) -> bool:
        return self.hi < other.lo

    # arithmetic

    def __neg__(self):
        return RationalEnclosure(-self.hi, -self.lo)

    def __add__(self, other):
        other = RationalEnclosure.coerce(other)
        return RationalEnclosure(self.lo + other.lo, self.hi + other.hi)

    __radd__ = __add__

    def __sub__(self, other):
        return self + (-RationalEnclosure.coerce(other))

    def __rsub__(self, other):
        return RationalEnclosure.coerce(other) - self

    def __mul__(self, other):
        other = RationalEnclosure.coerce(other)
        products = (self.lo * other.lo, self.lo * other.hi,
                    self.hi * other.lo, self.hi * other.hi)
        return RationalEnclosure(min(products), max(products))

    __rmul__ = __mul__

    def reciprocal(self) -> RationalEnclosure:
        if self.lo <= 0 <= self.hi:
            raise ZeroDivisionError("reciprocal of an enclosure containing 0")
        return RationalEnclosure(1 / self.hi, 1 / self.lo)

    def __truediv__(self, other):
        other = RationalEnclosure.coerce(other)
        return self * other.reciprocal()

    def __rtruediv__(self, other):
        return RationalEnclosure.coerce(other) * self.reciprocal()

    def square(self) -> RationalEnclosure:
        if self.lo >= 0:
            return RationalEnclosure(self.lo ** 2, self.hi ** 2)
        if self.hi <= 0:
            return RationalEnclosure(self.hi ** 2, self.lo ** 2)
        return RationalEnclosure(0, max(self.lo ** 2, self.hi ** 2))

    def sqrt(self, bits: int = 64) -> RationalEnclosure:
        if self.lo < 0:
            raise ValueError("square root of an enclosure reaching below 0")
        return RationalEnclosure(sqrt_bounds(self.lo, bits)[0], sqrt_bounds(self.hi, bits)[1])

    def decimal(self, digits: int = 15) -> tuple[str, str]:
        """Outward-rounded decimal renderings of the endpoints."""
        return (decimal_string(self.lo, digits, ROUND_FLOOR),
                decimal_string(self.hi, digits, ROUND_CEILING))

    def __repr__(self):
        lo, hi = self.decimal(12)
        return f"RationalEnclosure([{lo}, {hi}])"
