"""Exact rational intervals used as enclosures for irrational quantities."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction


@dataclass(frozen=True)
class RationalInterval:
    """Closed interval [lo, hi] with exact rational endpoints."""

    lo: Fraction
    hi: Fraction

    def __post_init__(self):
        if self.lo > self.hi:
            raise ValueError(f"lo must not exceed hi: {self.lo} > {self.hi}")

    @classmethod
    def point(cls, x) -> "RationalInterval":
        x = Fraction(x)
        return cls(x, x)

    @property
    def width(self) -> Fraction:
        return self.hi - self.lo

    def contains(self, x) -> bool:
        return self.lo <= Fraction(x) <= self.hi

    def midpoint(self) -> Fraction:
        return (self.lo + self.hi) / 2

    def __add__(self, other: "RationalInterval") -> "RationalInterval":
        return RationalInterval(self.lo + other.lo, self.hi + other.hi)

    def __mul__(self, other: "RationalInterval") -> "RationalInterval":
        products = (
            self.lo * other.lo,
            self.lo * other.hi,
            self.hi * other.lo,
            self.hi * other.hi,
        )
        return RationalInterval(min(products), max(products))

    def scale(self, c) -> "RationalInterval":
        c = Fraction(c)
        if c >= 0:
            return RationalInterval(self.lo * c, self.hi * c)
        return RationalInterval(self.hi * c, self.lo * c)

    def shift(self, c) -> "RationalInterval":
        c = Fraction(c)
        return RationalInterval(self.lo + c, self.hi + c)

    def reciprocal(self) -> "RationalInterval":
        if self.lo <= 0 <= self.hi:
            raise ZeroDivisionError("interval straddles zero")
        return RationalInterval(1 / self.hi, 1 / self.lo)

    def max_with_one(self) -> "RationalInterval":
        return RationalInterval(max(self.lo, Fraction(1)), max(self.hi, Fraction(1)))

    def intpow(self, k: int) -> "RationalInterval":
        if k < 0:
            return self.reciprocal().intpow(-k)
        out = RationalInterval.point(1)
        for _ in range(k):
            out = out * self
        return out

    def __str__(self) -> str:
        return f"[{self.lo}, {self.hi}]"


def sqrt_interval(x: RationalInterval, width: Fraction) -> RationalInterval:
    """Rational enclosure of sqrt over a non-negative interval, of width <= width."""
    if x.lo < 0:
        raise ValueError("negative radicand")
    if x.lo == x.hi:
        exact = _exact_sqrt(x.lo)
        if exact is not None:
            return RationalInterval.point(exact)
    lo = _sqrt_lower(x.lo, width / 2)
    hi = _sqrt_upper(x.hi, width / 2)
    if hi < lo:  # tiny inputs can invert the directed bounds
        lo, hi = hi, lo
    return RationalInterval(lo, hi)


def _exact_sqrt(x: Fraction):
    import math

    rn = math.isqrt(x.numerator)
    rd = math.isqrt(x.denominator)
    if rn * rn == x.numerator and rd * rd == x.denominator:
        return Fraction(rn, rd)
    return None


def _sqrt_scale(tol: Fraction) -> int:
    """Power of two 1/s <= tol, so isqrt at denominator s^2 meets tol."""
    s = 1
    while Fraction(1, s) > tol:
        s <<= 1
    return s


def _sqrt_lower(x: Fraction, tol: Fraction) -> Fraction:
    if x == 0:
        return Fraction(0)
    import math

    s = _sqrt_scale(tol)
    # floor(sqrt(x) * s) / s <= sqrt(x), within 1/s
    return Fraction(math.isqrt(x.numerator * s * s // x.denominator), s)


def _sqrt_upper(x: Fraction, tol: Fraction) -> Fraction:
    if x == 0:
        return Fraction(0)
    import math

    s = _sqrt_scale(tol)
    r = math.isqrt(x.numerator * s * s // x.denominator)
    return Fraction(r + 1, s)
