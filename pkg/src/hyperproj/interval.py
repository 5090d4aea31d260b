"""Rigorous interval enclosures with rational endpoints.

Arithmetic between intervals is exact on the endpoints; only :func:`isqrt_interval`
rounds, and it rounds outward onto a decimal grid.  Every enclosure therefore
contains the true real value.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import floor, ceil, isqrt

from .errors import InvalidInput


@dataclass(frozen=True)
class Interval:
    lo: Fraction
    hi: Fraction

    def __post_init__(self):
        object.__setattr__(self, "lo", Fraction(self.lo))
        object.__setattr__(self, "hi", Fraction(self.hi))
        if self.lo > self.hi:
            raise InvalidInput(f"empty interval [{self.lo}, {self.hi}]")

    @classmethod
    def point(cls, x) -> "Interval":
        return cls(x, x)

    @property
    def width(self) -> Fraction:
        return self.hi - self.lo

    def __contains__(self, x) -> bool:
        return self.lo <= x <= self.hi

    @staticmethod
    def _lift(other) -> "Interval":
        return other if isinstance(other, Interval) else Interval.point(other)

    def __add__(self, other):
        o = self._lift(other)
        return Interval(self.lo + o.lo, self.hi + o.hi)

    __radd__ = __add__

    def __neg__(self):
        return Interval(-self.hi, -self.lo)

    def __sub__(self, other):
        return self + (-self._lift(other))

    def __rsub__(self, other):
        return self._lift(other) - self

    def __mul__(self, other):
        o = self._lift(other)
        ps = (self.lo * o.lo, self.lo * o.hi, self.hi * o.lo, self.hi * o.hi)
        return Interval(min(ps), max(ps))

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = self._lift(other)
        if o.lo <= 0 <= o.hi:
            raise ZeroDivisionError("interval divisor contains zero")
        return self * Interval(1 / o.hi, 1 / o.lo)

    def __rtruediv__(self, other):
        return self._lift(other) / self

    def square(self) -> "Interval":
        if self.lo >= 0:
            return Interval(self.lo ** 2, self.hi ** 2)
        if self.hi <= 0:
            return Interval(self.hi ** 2, self.lo ** 2)
        return Interval(0, max(self.lo ** 2, self.hi ** 2))

    def clamp(self, lo=None, hi=None) -> "Interval":
        """Intersect with ``[lo, hi]``; callers use this for facts known a priori."""
        a = self.lo if lo is None else max(self.lo, Fraction(lo))
        b = self.hi if hi is None else min(self.hi, Fraction(hi))
        return Interval(a, b)

    def certainly_lt(self, c) -> bool:
        return self.hi < c

    def certainly_gt(self, c) -> bool:
        return self.lo > c

    def to_json(self, digits: int) -> dict:
        return {"lo": decimal_floor(self.lo, digits), "hi": decimal_ceil(self.hi, digits), "digits": digits}


def _sqrt_bounds(x: Fraction, grid: int) -> tuple[Fraction, Fraction]:
    """Bounds ``a <= sqrt(x) <= b`` with ``a, b`` on the grid ``Z / grid``."""
    scaled = x * grid * grid
    s = isqrt(floor(scaled))
    lo = Fraction(s, grid)
    hi = lo if s * s == scaled else Fraction(s + 1, grid)
    return lo, hi


def isqrt_interval(x: Interval, digits: int) -> Interval:
    """Outward-rounded square root at ``digits`` decimal places."""
    if x.hi < 0:
        raise InvalidInput("square root of a negative interval")
    grid = 10 ** digits
    lo, _ = _sqrt_bounds(max(x.lo, Fraction(0)), grid)
    _, hi = _sqrt_bounds(x.hi, grid)
    return Interval(lo, hi)


def _fmt(n: int, digits: int) -> str:
    sign = "-" if n < 0 else ""
    s = str(abs(n)).rjust(digits + 1, "0")
    return f"{sign}{s[:-digits]}.{s[-digits:]}" if digits else f"{sign}{s}"


def decimal_floor(x: Fraction, digits: int) -> str:
    return _fmt(floor(x * 10 ** digits), digits)


def decimal_ceil(x: Fraction, digits: int) -> str:
    return _fmt(ceil(x * 10 ** digits), digits)
