"""Iterated integrals over {0, +-1} by path splitting and multiple-polylog series.

``I(0; w; 1)`` is split at interior points.  Each piece ``I(a; x; b)`` is
moved by an affine map (and, when needed, path reversal) to
``I(0; y; 1)`` whose nonzero letters all satisfy ``|y| >= 1/q`` with
``q <= 1/2``.  For ``y = (b_1, 0^{n_1-1}, ..., b_d, 0^{n_d-1})``::

    I(0; y; 1) = (-1)^d sum_{0<k_1<...<k_d} prod_j b_j^{k_{j-1}-k_j} / k_j^{n_j}

and the inner sums are accumulated by the recurrence
``H_j(k+1) = (H_j(k) + F_{j-1}(k)) / b_j``, ``F_j(k) = H_j(k) / k^{n_j}``.
Since ``|F_j(k)| <= C(k-1, j-1) q^k``, truncating at ``k <= N`` costs at most
``sum_{k>N} k^{d-1} q^k``.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from math import comb

from .ball import Ball, _ceil_div


class DivergentWordError(ValueError):
    pass


@lru_cache(maxsize=None)
def _power_moments(q: Fraction, m: int) -> tuple[Fraction, ...]:
    """``S_i = sum_{n>=0} n^i q^n`` for ``i = 0..m`` (differentiated geometric series)."""
    s = [1 / (1 - q)]
    for i in range(1, m + 1):
        acc = sum((comb(i, j) * s[j] for j in range(i)), Fraction(0))
        s.append(q * acc / (1 - q))
    return tuple(s)


def tail_bound(depth: int, q: Fraction, n: int) -> Fraction:
    """Exact value of ``sum_{k>n} k^(depth-1) q^k``."""
    m = max(depth - 1, 0)
    s = _power_moments(q, m)
    a = n + 1
    # sum_{j>=0} (j + a)^m q^(j + a)
    return q**a * sum((comb(m, i) * a ** (m - i) * s[i] for i in range(m + 1)), Fraction(0))


@lru_cache(maxsize=4096)
def truncation_point(depth: int, q: Fraction, bits: int) -> int:
    """Least ``N`` with ``tail_bound(depth, q, N) <= 2**-bits``."""
    target = Fraction(1, 1 << bits)
    hi = 8
    while tail_bound(depth, q, hi) > target:
        hi *= 2
    lo = 0
    while lo < hi:
        mid = (lo + hi) // 2
        if tail_bound(depth, q, mid) > target:
            lo = mid + 1
        else:
            hi = mid
    return lo


def _ratio(letters) -> Fraction:
    nz = [abs(Fraction(y)) for y in letters if y != 0]
    return 1 / min(nz) if nz else Fraction(0)


def prefix_values(letters: list[Fraction], bits: int, n_terms: int | None = None) -> list[Ball]:
    """Balls for ``I(0; letters[:j]; 1)``, ``j = 0..len(letters)``.

    The first letter must be nonzero and every nonzero letter must have
    absolute value > 1.
    """
    letters = [Fraction(y) for y in letters]
    if letters and letters[0] == 0:
        raise DivergentWordError("series piece starts with a zero letter")
    q = _ratio(letters)
    if letters and q >= 1:
        raise ValueError("series piece does not converge geometrically")
    depth = sum(1 for y in letters if y)
    N = n_terms if n_terms is not None else truncation_point(max(depth, 1), q, bits) if letters else 0
    one = 1 << bits
    out = [Ball(one, 0, bits)]

    # F_{j-1}(k) for k = 0..N, with error bounds in ulps; F_0 = delta_0
    F = [0] * (N + 1)
    eF = [0] * (N + 1)
    F[0] = one
    G: list[int] = []
    eG: list[int] = []
    j = 0
    for y in letters:
        if y:
            j += 1
            if j > 1:
                F, eF = G, eG
            p, r = y.denominator, y.numerator  # multiply by 1/y = p/r
            sgn = 1 if r > 0 else -1
            r = abs(r)
            H = [0] * (N + 1)
            eH = [0] * (N + 1)
            h = e = 0
            for k in range(N):
                h = ((h + F[k]) * p * sgn) // r
                e = _ceil_div((e + eF[k]) * p, r) + 1
                H[k + 1] = h
                eH[k + 1] = e
            G = [0] + [H[k] // k for k in range(1, N + 1)]
            eG = [0] + [eH[k] // k + 2 for k in range(1, N + 1)]
        else:
            G = [0] + [G[k] // k for k in range(1, N + 1)]
            eG = [0] + [eG[k] // k + 2 for k in range(1, N + 1)]
        total = sum(G)
        err = sum(eG)
        t = tail_bound(j, q, N)
        tail = _ceil_div(t.numerator << bits, t.denominator)
        sign = -1 if j % 2 else 1
        out.append(Ball(sign * total, err + tail, bits))
    return out


def _piece_letters(letters, a: Fraction, b: Fraction, reverse: bool) -> list[Fraction]:
    if reverse:
        return [(Fraction(x) - b) / (a - b) for x in reversed(letters)]
    return [(Fraction(x) - a) / (b - a) for x in letters]


def eval_word_bits(w: tuple[int, ...], bits: int) -> Ball:
    """``I(0; w; 1)`` for a convergent word, split once at 1/2."""
    if w and (w[0] == 0 or w[-1] == 1):
        raise DivergentWordError(f"word {w} is divergent; regularize it first")
    n = len(w)
    if n == 0:
        return Ball(1 << bits, 0, bits)
    half = Fraction(1, 2)
    low = prefix_values(_piece_letters(w, Fraction(0), half, False), bits)
    high = prefix_values(_piece_letters(w, half, Fraction(1), True), bits)
    # I(1/2; v; 1) = (-1)^|v| I(1; rev v; 1/2)
    acc = Ball(0, 0, bits)
    for j in range(n + 1):
        term = low[j] * high[n - j]
        acc = acc + (term if (n - j) % 2 == 0 else -term)
    return acc


def _piece_orientation(a: Fraction, b: Fraction, alphabet) -> tuple[bool, Fraction]:
    """Pick forward/reverse mapping with the best geometric ratio."""
    best = None
    for reverse in (False, True):
        ys = _piece_letters(alphabet, a, b, reverse)
        q = _ratio(ys)
        if q < 1 and (best is None or q < best[1]):
            best = (reverse, q)
    if best is None:
        raise ValueError(f"no convergent orientation for [{a}, {b}]")
    return best


def eval_word_path(w: tuple[int, ...], points: list[Fraction], bits: int) -> Ball:
    """``I(0; w; 1)`` by composing the path through ``0 < points... < 1``.

    Used to check internal consistency of path composition; the outer pieces
    must be anchored at 0 and 1, inner pieces must avoid the letters.
    """
    if w and (w[0] == 0 or w[-1] == 1):
        raise DivergentWordError(f"word {w} is divergent; regularize it first")
    pts = [Fraction(0)] + [Fraction(p) for p in points] + [Fraction(1)]
    n = len(w)
    # V[e] = I(0; w[:e]; current point)
    V = [Ball(1 << bits, 0, bits)] + [None] * n
    for i in range(len(pts) - 1):
        a, b = pts[i], pts[i + 1]
        reverse, _ = _piece_orientation(a, b, (0, 1, -1))
        last = i == len(pts) - 2
        newV = []
        for e in range(n + 1):
            if last and e != n:
                newV.append(None)
                continue
            acc = Ball(0, 0, bits)
            for s in range(e + 1):
                if V[s] is None:
                    continue
                sub = w[s:e]
                if reverse:
                    vals = prefix_values(_piece_letters(sub, a, b, True), bits)
                    piece = vals[-1] if len(sub) % 2 == 0 else -vals[-1]
                else:
                    piece = prefix_values(_piece_letters(sub, a, b, False), bits)[-1]
                acc = acc + V[s] * piece
            newV.append(acc)
        V = newV
    return V[n]
