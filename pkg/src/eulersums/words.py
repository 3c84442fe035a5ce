"""Iterated-integral words over the alphabet {0, +1, -1}.

A word ``(x_1, ..., x_n)`` stands for ``I(0; x_1, ..., x_n; 1)``.  Words are
plain tuples of ints; the empty tuple is the unit of the shuffle algebra.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import NamedTuple

from .lincomb import LinComb, basis_key, lsum

LETTERS = (0, 1, -1)

Word = tuple[int, ...]


class WordError(ValueError):
    pass


def as_word(letters) -> Word:
    w = tuple(int(x) for x in letters)
    for x in w:
        if x not in LETTERS:
            raise WordError(f"letter {x!r} not in {{0, 1, -1}}")
    return w


class GeneralWord(NamedTuple):
    """``I(lower; letters; upper)`` with endpoints in {0, +1, -1}."""

    lower: int
    letters: Word
    upper: int

    def sort_key(self):
        return (basis_key((self.lower,)), basis_key(self.letters), basis_key((self.upper,)))

    def __str__(self) -> str:
        inner = ",".join(str(x) for x in self.letters)
        return f"I({self.lower};{inner};{self.upper})"


@dataclass(frozen=True)
class IndexVector:
    """``zeta_{k0}(k_1, ..., k_d; eps_1, ..., eps_d)`` with ``k0`` leading regularization zeros."""

    ks: tuple[int, ...] = ()
    eps: tuple[int, ...] = ()
    k0: int = 0

    def __post_init__(self):
        object.__setattr__(self, "ks", tuple(int(k) for k in self.ks))
        object.__setattr__(self, "eps", tuple(int(e) for e in self.eps))
        if len(self.ks) != len(self.eps):
            raise ValueError("ks and eps must have equal length")
        if any(k < 1 for k in self.ks):
            raise ValueError(f"indices must be positive: {self.ks}")
        if any(e not in (1, -1) for e in self.eps):
            raise ValueError(f"signs must be +1 or -1: {self.eps}")
        if self.k0 < 0:
            raise ValueError("k0 must be nonnegative")

    @classmethod
    def from_signed(cls, signed, k0: int = 0) -> IndexVector:
        """Build from the bar-as-negative encoding, e.g. ``(2, -10)`` for zeta(2, 10bar)."""
        signed = tuple(signed)
        if any(s == 0 for s in signed):
            raise ValueError("zero index")
        return cls(tuple(abs(s) for s in signed), tuple(1 if s > 0 else -1 for s in signed), k0)

    @property
    def signed(self) -> tuple[int, ...]:
        return tuple(k * e for k, e in zip(self.ks, self.eps))

    @property
    def depth(self) -> int:
        return len(self.ks)

    @property
    def weight(self) -> int:
        return self.k0 + sum(self.ks)

    @property
    def is_alternating(self) -> bool:
        return any(e == -1 for e in self.eps)

    def is_convergent(self) -> bool:
        if self.k0:
            return False
        return not self.ks or (self.ks[-1], self.eps[-1]) != (1, 1)

    def sort_key(self):
        return (self.weight, self.k0, self.depth, self.ks, tuple(-e for e in self.eps))

    def __str__(self) -> str:
        args = ",".join(str(s) for s in self.signed)
        if self.k0:
            return f"zr({self.k0};{args})"
        return f"z({args})"

    def __repr__(self) -> str:
        return f"IndexVector({self})"


def is_convergent(w: Word) -> bool:
    return not w or (w[0] != 0 and w[-1] != 1)


@lru_cache(maxsize=200_000)
def _shuffle_words(a: Word, b: Word) -> LinComb[Word]:
    if not a:
        return LinComb({b: 1})
    if not b:
        return LinComb({a: 1})
    acc: dict[Word, int] = {}
    for w, c in _shuffle_words(a[1:], b)._terms.items():
        acc[(a[0],) + w] = acc.get((a[0],) + w, 0) + c
    for w, c in _shuffle_words(a, b[1:])._terms.items():
        acc[(b[0],) + w] = acc.get((b[0],) + w, 0) + c
    return LinComb(acc)


def shuffle(w1: Word, w2: Word) -> LinComb[Word]:
    """Sum over all order-preserving interleavings of ``w1`` and ``w2``."""
    if w2 < w1:
        w1, w2 = w2, w1
    return _shuffle_words(tuple(w1), tuple(w2))


def shuffle_comb(c1: LinComb[Word], c2: LinComb[Word]) -> LinComb[Word]:
    """Bilinear extension of ``shuffle``."""
    return lsum(shuffle(w1, w2) * (a * b) for w1, a in c1._terms.items() for w2, b in c2._terms.items())


def index_to_word(ix: IndexVector) -> tuple[int, Word]:
    """Return ``(sign, w)`` with ``zeta_{k0}(ix) = sign * I(0; w; 1)``."""
    d = ix.depth
    letters = [0] * ix.k0
    eta = 1
    etas = [0] * d
    for j in range(d - 1, -1, -1):
        eta *= ix.eps[j]
        etas[j] = eta
    for k, e in zip(ix.ks, etas):
        letters.append(e)
        letters.extend([0] * (k - 1))
    return (-1) ** d, tuple(letters)


def word_to_index(w: Word) -> IndexVector:
    """Inverse of ``index_to_word``; leading zeros become ``k0``."""
    w = as_word(w)
    k0 = 0
    while k0 < len(w) and w[k0] == 0:
        k0 += 1
    etas: list[int] = []
    ks: list[int] = []
    for x in w[k0:]:
        if x:
            etas.append(x)
            ks.append(1)
        else:
            ks[-1] += 1
    eps = [etas[j] * (etas[j + 1] if j + 1 < len(etas) else 1) for j in range(len(etas))]
    return IndexVector(tuple(ks), tuple(eps), k0)


@lru_cache(maxsize=100_000)
def _regularize(w: Word) -> LinComb[Word]:
    if is_convergent(w):
        return LinComb({w: 1})
    a = 0
    while a < len(w) and w[a] == 0:
        a += 1
    if a:
        if a == len(w):
            return LinComb()
        # reg(0^a b v) = (-1)^a b (0^a sh v)
        b, v = w[a], w[a + 1 :]
        sign = (-1) ** a
        expanded = LinComb._raw({(b,) + x: sign * c for x, c in shuffle((0,) * a, v)._terms.items()})
        return expanded.map_basis(_regularize)
    c = 0
    while c < len(w) and w[-1 - c] == 1:
        c += 1
    if c == len(w):
        return LinComb()
    # reg(u b 1^c) = (-1)^c (u sh 1^c) b
    u, b = w[: len(w) - c - 1], w[len(w) - c - 1]
    sign = (-1) ** c
    return LinComb._raw({x + (b,): sign * k for x, k in shuffle(u, (1,) * c)._terms.items()})


def shuffle_regularize(w: Word) -> LinComb[Word]:
    """Shuffle-regularized value of ``I(0; w; 1)`` as a combination of convergent words.

    Fixed by ``reg(0) = reg(1) = 0``, the identity on convergent words and
    multiplicativity for the shuffle product.
    """
    return _regularize(tuple(w))


def regularize_comb(comb: LinComb[Word]) -> LinComb[Word]:
    return comb.map_basis(shuffle_regularize)


def index_to_words(ix: IndexVector) -> LinComb[Word]:
    """``zeta_{k0}(ix)`` as a combination of convergent words."""
    sign, w = index_to_word(ix)
    return shuffle_regularize(w) * sign


def word_weight(w: Word) -> int:
    return len(w)


def word_to_signed_index(w: Word) -> tuple[Fraction, IndexVector]:
    """``I(0; w; 1) = c * zeta_{k0}(ix)``."""
    ix = word_to_index(w)
    return Fraction((-1) ** ix.depth), ix
