"""Acceptance suite: one check per criterion, each printing a PASS/FAIL line.

Run with ``pytest tests/test_acceptance.py -v`` or directly with
``python3 tests/test_acceptance.py``.
"""

from __future__ import annotations

import random
import sys
import time
from fractions import Fraction
from math import comb
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from eulersums.identities import (  # noqa: E402
    assemble_theorem1,
    depth1_reduction,
    descent_even,
    descent_even_l1,
    dihedral,
    dihedral_l1,
    pushdown_39,
    theorem1,
    target_combination,
    z,
)
from eulersums.lincomb import LinComb  # noqa: E402
from eulersums.motivic import coaction_Dr, d1_reduced, reduce_D1  # noqa: E402
from eulersums.numerics import Precision, eval_identity, eval_index, eval_word  # noqa: E402
from eulersums.words import (  # noqa: E402
    IndexVector,
    index_to_word,
    is_convergent,
    regularize_comb,
    shuffle,
    shuffle_comb,
    shuffle_regularize,
)

from numeric_oracles import nested_partial_sums  # noqa: E402

RESULTS: list[str] = []


def report(label: str, ok: bool, seconds: float, detail: str = "") -> None:
    line = f"{'PASS' if ok else 'FAIL'}  {label}  ({seconds:.2f}s){'  ' + detail if detail else ''}"
    RESULTS.append(line)
    print(line, flush=True)


class Timer:
    def __enter__(self):
        self.t0 = time.perf_counter()
        return self

    def __exit__(self, *exc):
        self.seconds = time.perf_counter() - self.t0


@pytest.fixture(autouse=True)
def _show(capsys):
    yield
    out = capsys.readouterr().out
    with capsys.disabled():
        sys.stdout.write(("\n" + out) if out else "")


# 1 ---------------------------------------------------------------------------

K5_RIGHT_SIDE = {
    z(2, 10): Fraction(-9, 1024),
    z(3, 9): Fraction(-1, 64),
    z(4, 8): Fraction(-7, 256),
    z(5, 7): Fraction(-3, 64),
    z(6, 6): Fraction(-5, 64),
    z(7, 5): Fraction(-1, 8),
    z(8, 4): Fraction(-3, 16),
    z(9, 3): Fraction(-1, 4),
    z(10, 2): Fraction(767, 1024),
    z(3) * z(9): Fraction(623, 64),
    z(5) * z(7): Fraction(629, 64),
    z(2) * z(10): Fraction(-10997, 1024),
    z(6) * z(6): Fraction(-315, 64),
    z(4) * z(8): Fraction(-2505, 256),
    z(12): Fraction(45065, 4096),
}


def test_weight12_coefficient_table():
    with Timer() as t:
        rhs = target_combination(5) - theorem1(5).combination
        ok = rhs == LinComb(K5_RIGHT_SIDE) and len(rhs) == 15
    ok = ok and t.seconds < 1
    report("k=5 evaluation: all 15 coefficients exact", ok, t.seconds)
    assert ok


# 2 ---------------------------------------------------------------------------


def test_proof_replay_k1_to_20():
    with Timer() as t:
        bad = [k for k in range(1, 21) if assemble_theorem1(k).combination != theorem1(k).combination]
    ok = not bad and t.seconds < 10
    report("proof replay equals closed form, k=1..20", ok, t.seconds, f"mismatches={bad}")
    assert ok


# 3 ---------------------------------------------------------------------------


@pytest.mark.parametrize("k", range(1, 9))
def test_closed_form_numeric_50_digits(k):
    with Timer() as t:
        r = eval_identity(theorem1(k), 50)
    ok = r.passed and r.abs_residual < Fraction(1, 10**45)
    report(f"closed form k={k} (weight {2 * k + 2}) at 50 digits", ok, t.seconds, f"|residual|={float(r.abs_residual):.2e}")
    assert ok


# 4 ---------------------------------------------------------------------------


def test_depth_four_pushdown_40_digits():
    with Timer() as t:
        r = eval_identity(pushdown_39(), 40)
    ok = r.passed and t.seconds < 300
    report("zeta(3bar,9bar) pushdown at 40 digits", ok, t.seconds, f"|residual|={float(r.abs_residual):.2e}")
    assert ok


# 5 ---------------------------------------------------------------------------

FAMILY_PARAMS = [(k, l) for k in range(1, 6) for l in range(1, 6) if 2 * k + 2 * l <= 12]


@pytest.mark.parametrize("k,l", FAMILY_PARAMS)
def test_families_numeric_40_digits(k, l):
    with Timer() as t:
        reports = [eval_identity(dihedral(k, l), 40), eval_identity(descent_even(k, l), 40)]
    ok = all(r.passed for r in reports)
    worst = max(float(r.abs_residual) for r in reports)
    report(f"dihedral and even descent (k,l)=({k},{l}) at 40 digits", ok, t.seconds, f"max|residual|={worst:.2e}")
    assert ok


def test_family_specializations_exact():
    with Timer() as t:
        bad = [
            k
            for k in range(1, 9)
            if dihedral(k, 1).combination != dihedral_l1(k).combination
            or descent_even(k, 1).combination != descent_even_l1(k).combination
        ]
    ok = not bad
    report("l=1 specializations equal their closed forms, k=1..8", ok, t.seconds, f"mismatches={bad}")
    assert ok


# 6 ---------------------------------------------------------------------------


def test_depth_one_reduction_50_digits():
    with Timer() as t:
        reports = {n: eval_identity(depth1_reduction(n), 50) for n in range(2, 10)}
    ok = all(r.passed and r.residual.contains_zero() for r in reports.values())
    report("zeta(nbar) + (1-2^(1-n)) zeta(n) = 0, n=2..9, 50 digits", ok, t.seconds)
    assert ok


# 7 ---------------------------------------------------------------------------


def test_motivic_D1_vanishing():
    with Timer() as t:
        _, w = index_to_word(IndexVector((3, 9), (-1, -1)))
        first = reduce_D1(coaction_Dr(w, 1))
        bad = [k for k in range(1, 9) if d1_reduced(theorem1(k).combination)]
    ok = not first and not bad
    report("D1 zeta(3bar,9bar) = 0 and D1 of closed form = 0, k=1..8 (exact)", ok, t.seconds, f"nonzero k={bad}")
    assert ok


# 8 ---------------------------------------------------------------------------


def _random_word(rng, lo, hi):
    return tuple(rng.choice((0, 1, -1)) for _ in range(rng.randint(lo, hi)))


def test_property_suites():
    rng = random.Random(8)
    with Timer() as t:
        ok_shuffle = True
        for _ in range(500):
            a, b, c = _random_word(rng, 0, 4), _random_word(rng, 0, 3), _random_word(rng, 0, 3)
            s = shuffle(a, b)
            ok_shuffle &= s == shuffle(b, a) and s.total() == comb(len(a) + len(b), len(a))
            A, B, C = (LinComb({x: 1}) for x in (a, b, c))
            ok_shuffle &= shuffle_comb(shuffle_comb(A, B), C) == shuffle_comb(A, shuffle_comb(B, C))

        ok_reg = True
        for _ in range(200):
            w = _random_word(rng, 0, 12)
            r = shuffle_regularize(w)
            ok_reg &= regularize_comb(r) == r
            a, b = _random_word(rng, 0, 5), _random_word(rng, 0, 5)
            ok_reg &= regularize_comb(shuffle(a, b)) == shuffle_comb(shuffle_regularize(a), shuffle_regularize(b))

        ok_numeric = True
        pairs = 0
        while pairs < 50:
            n1 = rng.randint(1, 5)
            a, b = _random_word(rng, n1, n1), _random_word(rng, 1, 8 - n1)
            if not (is_convergent(a) and is_convergent(b)):
                continue
            prod = eval_word(a, 30) * eval_word(b, 30)
            total = sum((eval_word(w, 30) * c for w, c in shuffle(a, b)), start=eval_word((), 30) * 0)
            ok_numeric &= prod.overlaps(total)
            pairs += 1

        ok_mono = True
        for signed in [(-2,), (1, -3), (-3, -9), (2, -1, 2)]:
            balls = [eval_index(IndexVector.from_signed(signed), d) for d in (15, 30, 45)]
            ok_mono &= all(x.overlaps(y) for x, y in zip(balls, balls[1:]))
    ok = ok_shuffle and ok_reg and ok_numeric and ok_mono
    detail = f"shuffle={ok_shuffle} regularization={ok_reg} numeric_shuffle={ok_numeric} monotone={ok_mono}"
    report("property suites (500 shuffle, 200 regularization, 50 numeric, 3 precisions)", ok, t.seconds, detail)
    assert ok


# 9 ---------------------------------------------------------------------------

ORACLE_INDICES = [(-1,), (-2,), (-5,), (1, -1), (1, -2), (2, -1), (3, -3), (1, 1, -1), (1, 2, -3), (2, 1, 1, -2)]


def test_oracle_equivalence():
    n = 1000
    with Timer() as t:
        bad = []
        for signed in ORACLE_INDICES:
            sums = nested_partial_sums(list(signed), n + 1)
            lo, hi = sorted((sums[n], sums[n + 1]))
            ball = eval_index(IndexVector.from_signed(signed), Precision(30))
            if not (ball.lower <= hi and lo <= ball.upper):
                bad.append(signed)
    ok = not bad
    report("evaluator vs bracketed direct summation, 10 outer-alternating indices", ok, t.seconds, f"disagree={bad}")
    assert ok


if __name__ == "__main__":
    sys.exit(pytest.main([__file__, "-q"]))
