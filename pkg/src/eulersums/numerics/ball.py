"""Fixed-point midpoint-radius balls.

A ``Ball(mid, rad, bits)`` encloses the real interval
``[(mid - rad) / 2**bits, (mid + rad) / 2**bits]``.  Midpoint arithmetic is
on Python integers; every rounding step floors and adds one unit in the
last place to the radius, so enclosures are never lost.
"""

from __future__ import annotations

import math
from decimal import Decimal, localcontext
from fractions import Fraction


def _ceil_div(a: int, b: int) -> int:
    return -((-a) // b)


class Ball:
    __slots__ = ("mid", "rad", "bits")

    def __init__(self, mid: int, rad: int, bits: int):
        if rad < 0:
            raise ValueError("negative radius")
        self.mid = mid
        self.rad = rad
        self.bits = bits

    @classmethod
    def exact(cls, x: int | Fraction, bits: int) -> Ball:
        x = Fraction(x)
        num = x.numerator << bits
        mid, r = divmod(num, x.denominator)
        return cls(mid, 1 if r else 0, bits)

    @classmethod
    def zero(cls, bits: int) -> Ball:
        return cls(0, 0, bits)

    @classmethod
    def from_interval(cls, lo: Fraction, hi: Fraction, bits: int) -> Ball:
        """Smallest ball at this scale containing ``[lo, hi]``."""
        lo_i = math.floor(Fraction(lo) * 2**bits)
        hi_i = math.ceil(Fraction(hi) * 2**bits)
        mid = (lo_i + hi_i) // 2
        return cls(mid, max(mid - lo_i, hi_i - mid), bits)

    def at_bits(self, bits: int) -> Ball:
        if bits == self.bits:
            return self
        if bits > self.bits:
            s = bits - self.bits
            return Ball(self.mid << s, self.rad << s, bits)
        s = self.bits - bits
        mid = self.mid >> s
        exact = mid << s == self.mid
        return Ball(mid, _ceil_div(self.rad, 1 << s) + (0 if exact else 1), bits)

    def _align(self, other: Ball) -> tuple[Ball, Ball]:
        if self.bits == other.bits:
            return self, other
        b = min(self.bits, other.bits)
        return self.at_bits(b), other.at_bits(b)

    def __add__(self, other):
        if isinstance(other, (int, Fraction)):
            other = Ball.exact(other, self.bits)
        a, b = self._align(other)
        return Ball(a.mid + b.mid, a.rad + b.rad, a.bits)

    __radd__ = __add__

    def __neg__(self) -> Ball:
        return Ball(-self.mid, self.rad, self.bits)

    def __sub__(self, other):
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.scale(Fraction(other))
        a, b = self._align(other)
        prod = a.mid * b.mid
        mid = prod >> a.bits
        inexact = (mid << a.bits) != prod
        spread = abs(a.mid) * b.rad + abs(b.mid) * a.rad + a.rad * b.rad
        rad = _ceil_div(spread, 1 << a.bits) + (1 if inexact else 0)
        return Ball(mid, rad, a.bits)

    __rmul__ = __mul__

    def scale(self, c: Fraction) -> Ball:
        p, q = c.numerator, c.denominator
        mid, r = divmod(self.mid * p, q)
        return Ball(mid, _ceil_div(self.rad * abs(p), q) + (1 if r else 0), self.bits)

    def widen(self, ulps: int) -> Ball:
        return Ball(self.mid, self.rad + ulps, self.bits)

    # -- queries -------------------------------------------------------

    @property
    def mid_q(self) -> Fraction:
        return Fraction(self.mid, 1 << self.bits)

    @property
    def rad_q(self) -> Fraction:
        return Fraction(self.rad, 1 << self.bits)

    @property
    def lower(self) -> Fraction:
        return Fraction(self.mid - self.rad, 1 << self.bits)

    @property
    def upper(self) -> Fraction:
        return Fraction(self.mid + self.rad, 1 << self.bits)

    def contains(self, x) -> bool:
        x = Fraction(x)
        return self.lower <= x <= self.upper

    def overlaps(self, other: Ball) -> bool:
        return self.lower <= other.upper and other.lower <= self.upper

    def contains_zero(self) -> bool:
        return abs(self.mid) <= self.rad

    def abs_upper(self) -> Fraction:
        """Upper bound on the absolute value of any enclosed point."""
        return Fraction(abs(self.mid) + self.rad, 1 << self.bits)

    def rad_log2(self) -> int:
        """Smallest ``e`` with ``rad <= 2**e`` (as a real number)."""
        if self.rad == 0:
            return -self.bits - 1
        return (self.rad - 1).bit_length() - self.bits

    def __float__(self) -> float:
        return self.mid / 2**self.bits if self.bits < 1000 else float(self.mid_q)

    def mid_str(self, digits: int) -> str:
        with localcontext() as ctx:
            ctx.prec = digits + 5
            d = Decimal(self.mid) / (Decimal(2) ** self.bits)
            return format(d, f".{digits}e") if d else "0"

    def rad_str(self) -> str:
        if self.rad == 0:
            return "0"
        with localcontext() as ctx:
            ctx.prec = 3
            return format(Decimal(self.rad) / (Decimal(2) ** self.bits), ".2e")

    def __repr__(self) -> str:
        return f"[{self.mid_str(20)} +/- {self.rad_str()}]"
