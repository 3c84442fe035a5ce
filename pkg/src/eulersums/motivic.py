"""Motivic derivations ``D_r`` on words and the weight-1 (log 2) reduction of ``D_1``."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .identities import Monomial
from .lincomb import LinComb, lsum
from .words import GeneralWord, Word, index_to_words, regularize_comb, shuffle_comb

# (left factor, right factor) pairs
Tensor = tuple[GeneralWord, Word]


@dataclass(frozen=True)
class TensorComb:
    """Finite sum of ``I^L(left) (x) I^m(0; right; 1)`` with rational coefficients."""

    terms: LinComb[Tensor]
    raw: tuple[tuple[Tensor, Fraction], ...] = ()

    def __iter__(self):
        return iter(self.terms)

    def __len__(self) -> int:
        return len(self.terms)

    def __add__(self, other: TensorComb) -> TensorComb:
        return TensorComb(self.terms + other.terms, self.raw + other.raw)

    def __mul__(self, c) -> TensorComb:
        return TensorComb(self.terms * c, tuple((t, v * c) for t, v in self.raw))

    __rmul__ = __mul__

    def __eq__(self, other: object) -> bool:
        if isinstance(other, TensorComb):
            return self.terms == other.terms
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self.terms)

    def format(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for (left, right), c in self.terms:
            inner = ",".join(str(x) for x in right)
            parts.append(f"{c} * {left} (x) I({inner})")
        return "\n".join(parts)


def _tensor_key(t: Tensor):
    from .lincomb import basis_key

    return (t[0].sort_key(), basis_key(t[1]))


class _TensorBasis(tuple):
    """Tuple wrapper so ``LinComb`` can order (left, right) pairs canonically."""

    def sort_key(self):
        return _tensor_key(self)


def _pair(left: GeneralWord, right: Word) -> _TensorBasis:
    return _TensorBasis((left, right))


def coaction_Dr(w: Word, r: int, keep_raw: bool = False) -> TensorComb:
    """Cut-segment formula for ``D_r I^m(0; w; 1)``.

    One raw term per ``p = 0..len(w)-r``: the left factor is the segment
    ``a_p; a_{p+1..p+r}; a_{p+r+1}`` and the right factor is ``w`` with that
    segment's interior removed.
    """
    if r < 1:
        raise ValueError("r must be >= 1")
    a = (0,) + tuple(w) + (1,)
    n = len(w)
    raw = []
    for p in range(0, n - r + 1):
        left = GeneralWord(a[p], tuple(a[p + 1 : p + r + 1]), a[p + r + 1])
        right = tuple(a[1 : p + 1]) + tuple(a[p + r + 1 : n + 1])
        raw.append((_pair(left, right), Fraction(1)))
    terms = LinComb(raw)
    return TensorComb(terms, tuple(raw) if keep_raw else ())


def coaction_Dr_comb(comb: LinComb[Word], r: int) -> TensorComb:
    """Linear extension of ``coaction_Dr`` to combinations of words."""
    out = TensorComb(LinComb())
    for w, c in comb:
        out = out + coaction_Dr(w, r) * c
    return out


@dataclass(frozen=True)
class L1Class:
    """Element ``log2_coeff * [log 2]`` of the weight-1 level-2 Lie coalgebra."""

    log2_coeff: Fraction

    def __add__(self, other: L1Class) -> L1Class:
        return L1Class(self.log2_coeff + other.log2_coeff)

    def __bool__(self) -> bool:
        return bool(self.log2_coeff)


def _nu(x: int) -> int:
    # log|x| in units of log 2 over differences of {0, +-1}; log 0 regularizes to 0
    return 1 if abs(x) == 2 else 0


def weight1_class(a: int, b: int, c: int) -> L1Class:
    """Class of ``I(a; b; c) = log((c - b)/(a - b))``."""
    return L1Class(Fraction(_nu(c - b) - _nu(a - b)))


def reduce_D1(t: TensorComb, regularize: bool = True) -> LinComb[Word]:
    """Replace each weight-1 left factor by its log-2 coefficient.

    Returns the right-factor combination weighted by those coefficients, i.e.
    ``D_1 = [log 2] (x) result``.  Right factors are shuffle-regularized so
    that the result lives on convergent words.
    """
    acc = []
    for (left, right), c in t:
        if len(left.letters) != 1:
            raise ValueError(f"left factor {left} does not have weight 1")
        lam = weight1_class(left.lower, left.letters[0], left.upper).log2_coeff
        if lam:
            acc.append(LinComb({right: c * lam}))
    out = lsum(acc)
    return regularize_comb(out) if regularize else out


def monomial_words(m: Monomial) -> list[LinComb[Word]]:
    """Each factor of ``m`` as a combination of convergent words."""
    return [index_to_words(f) for f in m.factors]


def coaction_monomial(m: Monomial, r: int) -> TensorComb:
    """``D_r`` of a product by the Leibniz rule; other factors shuffle into the right side."""
    factors = monomial_words(m)
    out = TensorComb(LinComb())
    for i, fi in enumerate(factors):
        rest = LinComb({(): 1})
        for j, fj in enumerate(factors):
            if j != i:
                rest = shuffle_comb(rest, fj)
        d = coaction_Dr_comb(fi, r)
        terms = []
        for (left, right), c in d:
            for w, c2 in shuffle_comb(LinComb({right: 1}), rest):
                terms.append((_pair(left, w), c * c2))
        out = out + TensorComb(LinComb(terms))
    return out


def coaction_lift(comb: LinComb[Monomial], r: int) -> TensorComb:
    """``D_r`` of the motivic lift of a combination of zeta monomials."""
    out = TensorComb(LinComb())
    for m, c in comb:
        out = out + coaction_monomial(m, r) * c
    return out


def d1_reduced(comb: LinComb[Monomial]) -> LinComb[Word]:
    return reduce_D1(coaction_lift(comb, 1))
