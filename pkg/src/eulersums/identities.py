"""Identity families among (alternating) double zeta values.

Every identity is stored as a single combination ``LHS - RHS`` of zeta
monomials asserted to vanish.  ``assemble_theorem1`` rebuilds the closed
evaluation of ``zeta(2, 2kbar) + 2k zeta(1, (2k+1)bar)`` by eliminating
terms between the other families, in exact arithmetic.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from fractions import Fraction
from math import comb
from typing import Any

from .lincomb import LinComb, lsum
from .words import IndexVector, shuffle_regularize, word_to_index


class AssemblyError(RuntimeError):
    """An elimination step left a term it should have removed."""


def binom(a: int, b: int) -> int:
    if b < 0 or a < 0 or b > a:
        return 0
    return comb(a, b)


@dataclass(frozen=True)
class Monomial:
    """Product of zeta values; the empty product is the constant 1."""

    factors: tuple[IndexVector, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "factors", tuple(sorted(self.factors, key=IndexVector.sort_key)))

    @property
    def weight(self) -> int:
        return sum(f.weight for f in self.factors)

    def __mul__(self, other: Monomial) -> Monomial:
        return Monomial(self.factors + other.factors)

    def sort_key(self):
        return (len(self.factors), tuple(f.sort_key() for f in self.factors))

    def __str__(self) -> str:
        return "*".join(str(f) for f in self.factors) or "1"

    def __repr__(self) -> str:
        return f"Monomial({self})"


ONE = Monomial()


def z(*signed: int, k0: int = 0) -> Monomial:
    """Single-factor monomial in bar-as-negative notation: ``z(2, -10)``."""
    return Monomial((IndexVector.from_signed(signed, k0),))


def zeta(*signed: int, k0: int = 0) -> LinComb[Monomial]:
    return LinComb({z(*signed, k0=k0): 1})


def mono_mul(a: LinComb[Monomial], b: LinComb[Monomial]) -> LinComb[Monomial]:
    return lsum(LinComb({m1 * m2: c1 * c2}) for m1, c1 in a for m2, c2 in b)


@dataclass(frozen=True)
class Identity:
    name: str
    params: dict[str, int]
    combination: LinComb[Monomial]
    notes: tuple[str, ...] = field(default=(), compare=False)

    def weights(self) -> set[int]:
        return {m.weight for m, _ in self.combination}

    def is_homogeneous(self) -> bool:
        return len(self.weights()) <= 1

    def factors(self) -> set[IndexVector]:
        return {f for m, _ in self.combination for f in m.factors}

    def to_json(self) -> dict[str, Any]:
        return {
            "name": self.name,
            "params": dict(sorted(self.params.items())),
            "terms": [
                {
                    "coeff_num": c.numerator,
                    "coeff_den": c.denominator,
                    "factors": [[f.k0, list(f.ks), list(f.eps)] for f in m.factors],
                }
                for m, c in self.combination
            ],
        }

    def dumps(self) -> str:
        return json.dumps(self.to_json(), indent=2) + "\n"

    @classmethod
    def from_json(cls, data: dict[str, Any]) -> Identity:
        terms = []
        for t in data["terms"]:
            m = Monomial(tuple(IndexVector(tuple(ks), tuple(eps), k0) for k0, ks, eps in t["factors"]))
            terms.append((m, Fraction(t["coeff_num"], t["coeff_den"])))
        return cls(data["name"], {k: int(v) for k, v in data["params"].items()}, LinComb(terms))

    def __str__(self) -> str:
        from .expr import format_comb

        return f"{self.name}{self.params}: {format_comb(self.combination)} = 0"


def _check_pos(**kw: int) -> None:
    for name, v in kw.items():
        if v < 1:
            raise ValueError(f"{name} must be >= 1, got {v}")


def depth1_reduction(n: int) -> Identity:
    """``zeta(nbar) + (1 - 2^(1-n)) zeta(n) = 0`` for ``n >= 2``."""
    if n < 2:
        raise ValueError("depth-1 reduction needs n >= 2 (zeta(1bar) is excluded)")
    comb_ = zeta(-n) + zeta(n) * (1 - Fraction(2) ** (1 - n))
    return Identity("depth1", {"n": n}, comb_)


def dihedral(k: int, l: int) -> Identity:
    _check_pos(k=k, l=l)
    w = 2 * k + 2 * l
    terms = [
        zeta(1, -2 * k, k0=2 * l - 1),
        -zeta(-2 * k, -2 * l),
        zeta(-w) * -binom(w - 1, 2 * l - 1),
    ]
    # r = 1 is kept; its coefficient is zero and drops out
    for r in range(1, w - 1):
        c = (-1) ** r * binom(r - 1, 2 * l - 1) + binom(r - 1, 2 * k - 1)
        terms.append(LinComb({z(-r) * z(w - r): c}))
    return Identity("dihedral", {"k": k, "l": l}, lsum(terms))


def dihedral_l1(k: int) -> Identity:
    """The l = 1 case written out directly (r from 2, binom(2k+1, 1))."""
    _check_pos(k=k)
    rhs = [zeta(-(2 * k + 2)) * binom(2 * k + 1, 1)]
    for r in range(2, 2 * k + 1):
        rhs.append(LinComb({z(-r) * z(2 * k + 2 - r): -((-1) ** r * binom(r - 1, 1) + binom(r - 1, 2 * k - 1))}))
    lhs = zeta(1, -2 * k, k0=1) - zeta(-2 * k, -2)
    return Identity("dihedral", {"k": k, "l": 1}, lhs - lsum(rhs))


def descent_even(k: int, l: int) -> Identity:
    _check_pos(k=k, l=l)
    w = 2 * k + 2 * l
    rhs = []
    for i in range(2, w - 1):
        half = Fraction(1, 2**i)
        rhs.append(zeta(w - i, i) * (half * binom(i - 1, 2 * l - 1)))
        rhs.append(zeta(i, w - i) * (half * binom(i - 1, 2 * k - 1)))
    rhs.append(-zeta(2 * k, 2 * l))
    for r in range(2, w - 1):
        rhs.append(LinComb({z(r) * z(w - r): Fraction(binom(r - 1, 2 * l - 1), (-2) ** r)}))
    top = Fraction(2 * binom(w - 2, 2 * l - 1) + binom(w - 1, 2 * l - 1), 2**w)
    rhs.append(zeta(w) * -top)
    return Identity("descent", {"k": k, "l": l}, zeta(-2 * k, -2 * l) - lsum(rhs))


def descent_even_l1(k: int) -> Identity:
    """zeta(2kbar, 2bar) in the closed form with ``(r-1)/(-2)^r`` and ``-(6k+1)/2^(2k+2)``."""
    _check_pos(k=k)
    w = 2 * k + 2
    rhs = []
    for i in range(2, 2 * k + 1):
        rhs.append(zeta(w - i, i) * Fraction(binom(i - 1, 1), 2**i))
        rhs.append(zeta(i, w - i) * Fraction(binom(i - 1, 2 * k - 1), 2**i))
    rhs.append(-zeta(2 * k, 2))
    for r in range(2, 2 * k + 1):
        rhs.append(LinComb({z(r) * z(w - r): Fraction(r - 1, (-2) ** r)}))
    rhs.append(zeta(w) * -Fraction(6 * k + 1, 2 ** (2 * k + 2)))
    return Identity("descent", {"k": k, "l": 1}, zeta(-2 * k, -2) - lsum(rhs))


def regularized_word(k: int) -> tuple[int, ...]:
    """``0, -1, -1, 0^(2k-1)``: the word of zeta^sh_1(1, 2kbar)."""
    return (0, -1, -1) + (0,) * (2 * k - 1)


def goal_regularization(k: int) -> Identity:
    """``zeta^sh_1(1, 2kbar)`` minus its shuffle regularization, read back as zeta values."""
    _check_pos(k=k)
    word = regularized_word(k)
    ix = word_to_index(word)
    sign = (-1) ** ix.depth
    expansion = []
    for w, c in shuffle_regularize(word):
        wix = word_to_index(w)
        expansion.append(LinComb({Monomial((wix,)): c * sign * (-1) ** wix.depth}))
    return Identity("goal", {"k": k}, LinComb({Monomial((ix,)): 1}) - lsum(expansion))


def target_combination(k: int) -> LinComb[Monomial]:
    """``zeta(2, 2kbar) + 2k zeta(1, (2k+1)bar)``."""
    return zeta(2, -2 * k) + zeta(1, -(2 * k + 1)) * (2 * k)


def theorem1(k: int) -> Identity:
    _check_pos(k=k)
    w = 2 * k + 2
    rhs = [zeta(2 * k, 2)]
    for i in range(2, 2 * k + 1):
        half = Fraction(1, 2**i)
        rhs.append(zeta(w - i, i) * -(half * binom(i - 1, 1)))
        rhs.append(zeta(i, w - i) * -(half * binom(i - 1, 2 * k - 1)))
    for r in range(2, 2 * k + 1):
        c = (-1) ** r * (1 - Fraction(1, 2**r)) * binom(r - 1, 1) + binom(r - 1, 2 * k - 1) * (1 - Fraction(2) ** (1 - r))
        rhs.append(LinComb({z(r) * z(w - r): -c}))
    rhs.append(zeta(w) * (2 + (2 * k - 1) * (1 + Fraction(1, 2 ** (2 * k + 2)))))
    return Identity("theorem1", {"k": k}, target_combination(k) - lsum(rhs))


_PUSHDOWN_RHS = [
    (Fraction(9, 64), [(1, 1, 4, 6)]),
    (Fraction(-371, 1024), [(3, 9)]),
    (Fraction(-27, 64), [(2,), (3, 7)]),
    (Fraction(-27, 128), [(4,), (3, 5)]),
    (Fraction(3131, 1024), [(3,), (9,)]),
    (Fraction(-321, 512), [(5,), (7,)]),
    (Fraction(-3, 256), [(3,), (3,), (3,), (3,)]),
    (Fraction(-45, 32), [(2,), (3,), (7,)]),
    (Fraction(-63, 128), [(2,), (5,), (5,)]),
    (Fraction(9, 128), [(4,), (3,), (5,)]),
    (Fraction(81, 256), [(6,), (3,), (3,)]),
    (Fraction(353139, 2830336), [(12,)]),
]


def pushdown_39() -> Identity:
    """zeta(3bar, 9bar) through depth-2 values and the depth-4 zeta(1,1,4,6)."""
    rhs = LinComb(
        (Monomial(tuple(IndexVector.from_signed(s) for s in factors)), c) for c, factors in _PUSHDOWN_RHS
    )
    return Identity("pushdown39", {}, zeta(-3, -9) - rhs)


def substitute(combo: LinComb[Monomial], target: IndexVector, value: LinComb[Monomial]) -> LinComb[Monomial]:
    """Replace every occurrence of the factor ``target`` by ``value`` and expand."""
    out = []
    for m, c in combo:
        rest = [f for f in m.factors if f != target]
        power = len(m.factors) - len(rest)
        term = LinComb({Monomial(tuple(rest)): c})
        for _ in range(power):
            term = mono_mul(term, value)
        out.append(term)
    return lsum(out)


def solve_for(identity: Identity, target: IndexVector) -> LinComb[Monomial]:
    """Value of ``target`` implied by ``identity`` (which must contain it linearly)."""
    key = Monomial((target,))
    c = identity.combination.coeff(key)
    if not c:
        raise AssemblyError(f"{identity.name}{identity.params} does not contain {target}")
    rest = identity.combination - LinComb({key: c})
    if any(target in m.factors for m, _ in rest):
        raise AssemblyError(f"{target} occurs nonlinearly in {identity.name}")
    return rest * (-1 / c)


def _eliminate(combo, identity, target):
    return substitute(combo, target, solve_for(identity, target))


def assemble_theorem1_trace(k: int) -> list[tuple[str, LinComb[Monomial]]]:
    """Replay the elimination chain; returns the combination after each step."""
    _check_pos(k=k)
    reg = IndexVector((1, 2 * k), (1, -1), k0=1)
    alt_double = IndexVector.from_signed((-2 * k, -2))
    steps = []
    combo = goal_regularization(k).combination
    if reg not in {f for m, _ in combo for f in m.factors}:
        raise AssemblyError(f"goal identity does not produce {reg}")
    steps.append(("goal", combo))
    combo = _eliminate(combo, dihedral(k, 1), reg)
    steps.append(("dihedral", combo))
    combo = _eliminate(combo, descent_even(k, 1), alt_double)
    steps.append(("descent", combo))
    depth1 = sorted(
        {f for m, _ in combo for f in m.factors if f.depth == 1 and f.is_alternating},
        key=IndexVector.sort_key,
    )
    for f in depth1:
        if f.ks[0] < 2:
            raise AssemblyError("zeta(1bar) entered the assembly")
        combo = _eliminate(combo, depth1_reduction(f.ks[0]), f)
    steps.append(("depth1", combo))

    lhs = set(target_combination(k).keys())
    for m, _ in combo:
        if m in lhs:
            continue
        for f in m.factors:
            if f.is_alternating or f.k0:
                raise AssemblyError(f"elimination left {f} in the result")
            if f.depth > 2:
                raise AssemblyError(f"depth {f.depth} factor {f} in the result")
    lead = combo.coeff(z(2, -2 * k))
    if not lead:
        raise AssemblyError("left side vanished during elimination")
    steps.append(("normalized", combo / lead))
    return steps


def assemble_theorem1(k: int) -> Identity:
    combo = assemble_theorem1_trace(k)[-1][1]
    result = Identity("assemble-theorem1", {"k": k}, combo)
    if combo != theorem1(k).combination:
        diff = combo - theorem1(k).combination
        raise AssemblyError(f"assembled identity differs from theorem1({k}) by {diff}")
    return result


IDENTITY_FAMILIES = {
    "depth1": (depth1_reduction, ("n",)),
    "dihedral": (dihedral, ("k", "l")),
    "descent": (descent_even, ("k", "l")),
    "goal": (goal_regularization, ("k",)),
    "theorem1": (theorem1, ("k",)),
    "pushdown39": (pushdown_39, ()),
    "assemble-theorem1": (assemble_theorem1, ("k",)),
}


def build(name: str, **params: int) -> Identity:
    try:
        fn, names = IDENTITY_FAMILIES[name]
    except KeyError:
        raise KeyError(f"unknown identity {name!r}; known: {', '.join(IDENTITY_FAMILIES)}") from None
    missing = [p for p in names if params.get(p) is None]
    if missing:
        raise ValueError(f"{name} needs parameter(s): {', '.join(missing)}")
    return fn(*(params[p] for p in names))
