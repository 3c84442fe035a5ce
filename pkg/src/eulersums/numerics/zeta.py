"""Riemann zeta at integers via Borwein's accelerated alternating series."""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from math import factorial

from .ball import Ball


@lru_cache(maxsize=64)
def _borwein_d(m: int) -> tuple[int, ...]:
    """``d_k = m sum_{i<=k} (m+i-1)! 4^i / ((m-i)! (2i)!)``, all integers."""
    out = []
    acc = Fraction(0)
    for i in range(m + 1):
        acc += Fraction(factorial(m + i - 1) * 4**i, factorial(m - i) * factorial(2 * i))
        out.append(acc * m)
    assert all(d.denominator == 1 for d in out)
    return tuple(int(d) for d in out)


def _terms_needed(bits: int) -> int:
    # error <= 3 / ((3 + sqrt 8)^m |1 - 2^(1-s)|) <= 6 * 5.8^-m for s >= 2
    m = 1
    bound = Fraction(6)
    target = Fraction(1, 1 << (bits + 1))
    while bound > target:
        bound /= Fraction(29, 5)
        m += 1
    return m


def zeta_bits(s: int, bits: int) -> Ball:
    if s < 2:
        raise ValueError(f"zeta({s}) diverges; need s >= 2")
    m = _terms_needed(bits)
    d = _borwein_d(m)
    dn = d[m]
    work = bits + 16
    acc = 0
    for k in range(m):
        num = (-1) ** k * (d[k] - dn) << work
        acc += num // (k + 1) ** s
    # acc carries at most m ulps of floor error at scale 2^work
    series = Ball(acc, m, work)
    factor = Fraction(-(2 ** (s - 1)), dn * (2 ** (s - 1) - 1))
    val = series.scale(factor).at_bits(bits)
    return val.widen(1)
