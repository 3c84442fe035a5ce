"""Guaranteed-error evaluation of words, zeta values, monomials and identities."""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Any

from ..identities import Identity, Monomial
from ..lincomb import LinComb
from ..words import IndexVector, Word, index_to_words
from .ball import Ball
from .cache import CacheError, ConstantCache
from .series import DivergentWordError, eval_word_bits, eval_word_path
from .zeta import zeta_bits

__all__ = [
    "Ball",
    "CacheError",
    "ConstantCache",
    "DivergentWordError",
    "Precision",
    "VerificationReport",
    "eval_comb",
    "eval_identity",
    "eval_index",
    "eval_monomial",
    "eval_word",
    "eval_word_path",
    "open_cache",
    "zeta_single",
]

GUARD_BITS = 64


@dataclass(frozen=True)
class Precision:
    target_digits: int = 40

    def __post_init__(self):
        if self.target_digits < 10:
            raise ValueError("target_digits must be at least 10")

    @property
    def bits(self) -> int:
        return math.ceil(self.target_digits * math.log2(10)) + GUARD_BITS

    @property
    def tolerance(self) -> Fraction:
        return Fraction(1, 10**self.target_digits)


def _as_precision(p: Precision | int) -> Precision:
    return p if isinstance(p, Precision) else Precision(int(p))


def _meets(ball: Ball, p: Precision) -> bool:
    return ball.rad_q <= p.tolerance * max(1, abs(ball.mid_q))


def eval_word(w: Word, p: Precision | int = 40) -> Ball:
    """Ball around ``I(0; w; 1)``; ``w`` must be convergent."""
    p = _as_precision(p)
    bits = p.bits
    for _ in range(8):
        ball = eval_word_bits(tuple(w), bits)
        if _meets(ball, p):
            return ball.at_bits(p.bits)
        bits += 32
    raise ArithmeticError(f"could not reach {p.target_digits} digits for {w}")


def zeta_single(n: int, p: Precision | int = 40) -> Ball:
    p = _as_precision(p)
    return zeta_bits(n, p.bits)


def _index_ball(ix: IndexVector, p: Precision) -> Ball:
    if ix.depth == 1 and not ix.k0 and not ix.is_alternating and ix.ks[0] >= 2:
        return zeta_single(ix.ks[0], p)
    acc = Ball.zero(p.bits)
    for w, c in index_to_words(ix):
        acc = acc + eval_word(w, p) * c
    return acc


def eval_index(ix: IndexVector, p: Precision | int = 40, cache: ConstantCache | None = None) -> Ball:
    """Regularized value of ``zeta_{k0}(ks; eps)``."""
    p = _as_precision(p)
    key = str(ix)
    if cache is not None:
        hit = cache.get(key, p.bits)
        if hit is not None:
            return hit
    ball = _index_ball(ix, p)
    if cache is not None:
        cache.put(key, ball)
    return ball


def open_cache(directory, validate: bool = True) -> ConstantCache:
    """Open a cache directory; a reopened cache is spot-checked against a fresh evaluation."""
    cache = ConstantCache(directory)
    if validate and len(cache):
        check = Precision(20)
        cache.validate(lambda ix, _bits: _index_ball(ix, check), bits=check.bits)
    return cache


def eval_monomial(m: Monomial, p: Precision | int = 40, cache: ConstantCache | None = None) -> Ball:
    p = _as_precision(p)
    acc = Ball.exact(1, p.bits)
    for f in m.factors:
        acc = acc * eval_index(f, p, cache)
    return acc


def eval_comb(comb: LinComb[Monomial], p: Precision | int = 40, cache: ConstantCache | None = None) -> Ball:
    p = _as_precision(p)
    acc = Ball.zero(p.bits)
    for m, c in comb:
        acc = acc + eval_monomial(m, p, cache) * c
    return acc


@dataclass(frozen=True)
class VerificationReport:
    name: str
    params: dict[str, int]
    digits: int
    residual: Ball
    passed: bool

    @property
    def abs_residual(self) -> Fraction:
        return abs(self.residual.mid_q)

    def to_json(self) -> dict[str, Any]:
        return {
            "name": self.name,
            "params": dict(sorted(self.params.items())),
            "digits": self.digits,
            "residual": {
                "mid": self.residual.mid_str(self.digits + 5),
                "rad": self.residual.rad_str(),
                "rad_log2": self.residual.rad_log2(),
            },
            "pass": self.passed,
        }

    def __str__(self) -> str:
        verdict = "PASS" if self.passed else "FAIL"
        params = " ".join(f"{k}={v}" for k, v in sorted(self.params.items()))
        return f"{verdict} {self.name} {params} digits={self.digits} residual={self.residual!r}".replace("  ", " ")


def eval_identity(identity: Identity, p: Precision | int = 40, cache: ConstantCache | None = None) -> VerificationReport:
    """Evaluate ``identity.combination``; passes when the residual is zero to the target."""
    p = _as_precision(p)
    residual = eval_comb(identity.combination, p, cache)
    slack = Fraction(1, 10 ** (p.target_digits - 5))
    passed = abs(residual.mid_q) <= residual.rad_q + slack
    return VerificationReport(identity.name, dict(identity.params), p.target_digits, residual, passed)
