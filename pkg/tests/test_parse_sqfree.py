import random
from fractions import Fraction

import pytest
from hypothesis import given

from recprs.errors import ParseError, ZeroPolynomial
from recprs.families import random_root_product
from recprs.parse import parse_poly
from recprs.poly import Poly, derivative, divmod_poly, gcd_poly, primitive_part, render
from recprs.prs import RULES
from recprs.sqfree import gcd_tower, multiplicity_profile, reconstruct, sqfree

from conftest import P, polys

X = Poly.x()


@pytest.mark.parametrize("text, expected", [
    ("x^2 - 1", P(1, 0, -1)),
    ("3x^2+2*x-7", P(3, 2, -7)),
    ("-x", -X),
    ("1/2x + 3/4", Poly((Fraction(3, 4), Fraction(1, 2)))),
    ("x + x", 2 * X),
    ("x^3 - x^3 + 5", P(5)),
    ("  7 ", P(7)),
])
def test_parse_examples(text, expected):
    assert parse_poly(text) == expected


@pytest.mark.parametrize("text, pos", [
    ("x^", 2),
    ("3*", 2),
    ("x + y", 4),
    ("1/0 x", 2),
    ("", 0),
    ("2x 3", 3),
])
def test_parse_errors_carry_position(text, pos):
    with pytest.raises(ParseError) as info:
        parse_poly(text)
    assert info.value.position == pos


@given(polys(max_degree=7))
def test_render_parse_round_trip(p):
    assert parse_poly(render(p)) == p


def test_render_round_trip_seeded():
    rng = random.Random(5)
    for _ in range(200):
        p = Poly([Fraction(rng.randint(-20, 20), rng.randint(1, 6)) for _ in range(rng.randint(1, 9))])
        assert parse_poly(render(p)) == p


def yun(p):
    """Independent square-free oracle: Yun's algorithm over Q with gcd_poly."""
    dp = derivative(p)
    a = gcd_poly(p, dp)
    b, _ = divmod_poly(p, a)
    c, _ = divmod_poly(dp, a)
    d = c - derivative(b)
    out, k = [], 1
    while b.degree >= 1:
        w = gcd_poly(b, d)
        if w.degree >= 1:
            out.append((primitive_part(w), k))
        b, _ = divmod_poly(b, w)
        c, _ = divmod_poly(d, w)
        d = c - derivative(b)
        k += 1
    return out


@pytest.mark.parametrize("p, expected", [
    ((X - 1) ** 2 * (X + 3), [(X + 3, 1), (X - 1, 2)]),
    (X ** 2 + 1, [(X ** 2 + 1, 1)]),
    ((X - 1) ** 2 * (X + 1) ** 2 * (X + 2), [(X + 2, 1), (X ** 2 - 1, 2)]),
    (2 * X ** 3, [(X, 3)]),
])
def test_sqfree_examples(p, expected):
    constant, factors = sqfree(p)
    assert factors == expected
    assert reconstruct(constant, factors) == p


def test_sqfree_constants_and_zero():
    assert sqfree(P(5)) == (5, [])
    assert sqfree(-3 * X + 6) == (-3, [(X - 2, 1)])
    with pytest.raises(ZeroPolynomial):
        sqfree(Poly())


def test_gcd_tower_example():
    p = (X - 1) ** 3 * (X + 2)
    assert gcd_tower(p) == [p, (X - 1) ** 2, X - 1, Poly((1,))]


@pytest.mark.parametrize("rule", RULES)
def test_sqfree_random_products(rule):
    rng = random.Random(f"sqfree:{rule}")
    for _ in range(40):
        p, roots = random_root_product(rng)
        constant, factors = sqfree(p, rule)
        assert reconstruct(constant, factors) == p
        assert factors == yun(p)
        expected = {}
        for e in roots.values():
            expected[e] = expected.get(e, 0) + 1
        assert multiplicity_profile(factors) == sorted((c, e) for e, c in expected.items())
        for q, _ in factors:
            assert gcd_poly(q, derivative(q)).degree == 0
