from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from eulersums.expr import ParseError, divergent_atoms, format_comb, format_expr, parse, to_lincomb
from eulersums.identities import IDENTITY_FAMILIES, build, target_combination, z, zeta
from eulersums.lincomb import LinComb
from eulersums.words import IndexVector


def test_theorem1_left_side_k5():
    assert to_lincomb(parse("z(2,-10) + 10*z(1,-11)")) == target_combination(5)


def test_regularized_zeta():
    e = parse("zr(1; 1,-2)")
    assert e.index == IndexVector((1, 2), (1, -1), k0=1)


def test_word_literal_is_minus_zeta2():
    assert to_lincomb(parse("I(1,0)")) == LinComb({z(2): -1})


def test_rationals_products_and_parentheses():
    got = to_lincomb(parse("3/4*z(3) - (z(2) - 1/2)*z(2)"))
    assert got == zeta(3) * Fraction(3, 4) - LinComb({z(2) * z(2): 1}) + zeta(2) * Fraction(1, 2)


def test_unary_minus():
    assert to_lincomb(parse("-z(2) + -2*z(3)")) == -zeta(2) - zeta(3) * 2


@pytest.mark.parametrize(
    "text, pos, fragment",
    [
        ("z(0)", 2, "zeta argument 0"),
        ("z(1", 3, "expected ')'"),
        ("I(2)", 2, "word letter"),
        ("z(2) $ z(3)", 5, "unexpected character"),
        ("z(2) +", 6, "unexpected end"),
        ("1/0", 2, "zero denominator"),
        ("zr(1 1,2)", 5, "expected ';'"),
    ],
)
def test_errors_are_positioned(text, pos, fragment):
    with pytest.raises(ParseError) as info:
        parse(text)
    assert info.value.pos == pos
    assert fragment in str(info.value)
    assert "^" in str(info.value)


def test_divergent_atoms():
    assert divergent_atoms(parse("z(1) + z(2,1) + z(1,-1) + I(0,-1) + I(-1,1) + zr(1;2)")) == [
        "z(1)",
        "z(2,1)",
        "I(0,-1)",
        "I(-1,1)",
    ]


@pytest.mark.parametrize("name", [n for n in IDENTITY_FAMILIES if n != "assemble-theorem1"])
def test_canonical_print_parse_round_trip(name):
    ident = build(name, k=2, l=1, n=5)
    text = format_comb(ident.combination)
    assert to_lincomb(parse(text)) == ident.combination
    assert format_comb(to_lincomb(parse(text))) == text


def test_canonical_print_is_ordered():
    assert format_comb(target_combination(5)) == "10*z(1,-11) + z(2,-10)"
    assert format_comb(LinComb()) == "0"


atoms = st.one_of(
    st.builds(lambda a, b: f"{a}/{b}", st.integers(0, 30), st.integers(1, 30)),
    st.lists(st.integers(-5, 5).filter(bool), min_size=1, max_size=3).map(lambda ks: f"z({','.join(map(str, ks))})"),
    st.lists(st.sampled_from((0, 1, -1)), min_size=1, max_size=4).map(lambda ws: f"I({','.join(map(str, ws))})"),
)
@settings(max_examples=200)
@given(
    st.recursive(
        atoms,
        lambda inner: st.one_of(
            st.tuples(inner, st.sampled_from(["+", "-", "*"]), inner).map(lambda t: f"({t[0]}) {t[1]} ({t[2]})"),
            inner.map(lambda e: f"-({e})"),
        ),
        max_leaves=6,
    )
)
def test_tree_print_parse_round_trip(text):
    tree = parse(text)
    printed = format_expr(tree)
    assert parse(printed) == tree or to_lincomb(parse(printed)) == to_lincomb(tree)
    assert format_expr(parse(printed)) == printed
