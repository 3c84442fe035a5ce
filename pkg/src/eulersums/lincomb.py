"""Finite formal sums with exact rational coefficients."""

from __future__ import annotations

from collections.abc import Callable, Hashable, Iterable, Iterator, Mapping
from fractions import Fraction
from typing import Any, Generic, TypeVar

B = TypeVar("B", bound=Hashable)

# 0 < +1 < -1 inside words
_LETTER_RANK = {0: 0, 1: 1, -1: 2}


def basis_key(b: Any) -> Any:
    """Canonical sort key: words by letter rank, other bases by ``sort_key()``."""
    if isinstance(b, tuple) and all(type(x) is int for x in b):
        return tuple(_LETTER_RANK[x] for x in b)
    return b.sort_key()


Scalar = int | Fraction


class LinComb(Generic[B]):
    """Immutable map ``basis element -> nonzero Fraction``.

    Zero coefficients are never stored, so two combinations are equal exactly
    when their coefficient maps agree.  Iteration is in canonical basis order
    (see ``basis_key``).
    """

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms: Mapping[B, Scalar] | Iterable[tuple[B, Scalar]] = ()):
        acc: dict[B, Fraction] = {}
        items = terms.items() if isinstance(terms, Mapping) else terms
        for b, c in items:
            acc[b] = acc.get(b, Fraction(0)) + Fraction(c)
        self._terms = {b: c for b, c in acc.items() if c}
        self._hash: int | None = None

    @classmethod
    def _raw(cls, terms: dict[B, Fraction]) -> LinComb[B]:
        obj = cls.__new__(cls)
        obj._terms = terms
        obj._hash = None
        return obj

    @classmethod
    def basis(cls, b: B, coeff: Scalar = 1) -> LinComb[B]:
        return cls({b: coeff})

    def __iter__(self) -> Iterator[tuple[B, Fraction]]:
        for b in sorted(self._terms, key=basis_key):
            yield b, self._terms[b]

    def items(self) -> list[tuple[B, Fraction]]:
        return list(self)

    def keys(self) -> list[B]:
        return [b for b, _ in self]

    def coeff(self, b: B) -> Fraction:
        return self._terms.get(b, Fraction(0))

    def __contains__(self, b: object) -> bool:
        return b in self._terms

    def __len__(self) -> int:
        return len(self._terms)

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __eq__(self, other: object) -> bool:
        if isinstance(other, LinComb):
            return self._terms == other._terms
        if other == 0:
            return not self._terms
        return NotImplemented

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(frozenset(self._terms.items()))
        return self._hash

    def __add__(self, other: LinComb[B]) -> LinComb[B]:
        if not isinstance(other, LinComb):
            return NotImplemented
        acc = dict(self._terms)
        for b, c in other._terms.items():
            s = acc.get(b, 0) + c
            if s:
                acc[b] = s
            else:
                acc.pop(b, None)
        return LinComb._raw(acc)

    def __neg__(self) -> LinComb[B]:
        return LinComb._raw({b: -c for b, c in self._terms.items()})

    def __sub__(self, other: LinComb[B]) -> LinComb[B]:
        if not isinstance(other, LinComb):
            return NotImplemented
        return self + (-other)

    def __mul__(self, scalar: Scalar) -> LinComb[B]:
        if not isinstance(scalar, (int, Fraction)):
            return NotImplemented
        s = Fraction(scalar)
        if not s:
            return LinComb._raw({})
        return LinComb._raw({b: c * s for b, c in self._terms.items()})

    __rmul__ = __mul__

    def __truediv__(self, scalar: Scalar) -> LinComb[B]:
        return self * (1 / Fraction(scalar))

    def map_basis(self, f: Callable[[B], LinComb]) -> LinComb:
        """Extend ``f`` linearly: ``sum c * f(b)``."""
        acc: dict = {}
        for b, c in self._terms.items():
            for b2, c2 in f(b)._terms.items():
                s = acc.get(b2, 0) + c * c2
                if s:
                    acc[b2] = s
                else:
                    acc.pop(b2, None)
        return LinComb._raw(acc)

    def total(self) -> Fraction:
        """Sum of all coefficients."""
        return sum(self._terms.values(), Fraction(0))

    def __repr__(self) -> str:
        if not self._terms:
            return "LinComb(0)"
        body = " + ".join(f"{c}*{b!r}" for b, c in self)
        return f"LinComb({body})"


def lsum(combs: Iterable[LinComb[B]], start: LinComb[B] | None = None) -> LinComb[B]:
    """Sum of combinations without repeated copying."""
    acc: dict = {} if start is None else dict(start._terms)
    for comb in combs:
        for b, c in comb._terms.items():
            s = acc.get(b, 0) + c
            if s:
                acc[b] = s
            else:
                acc.pop(b, None)
    return LinComb._raw(acc)
