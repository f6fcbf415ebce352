from fractions import Fraction

import pytest
from hypothesis import given

from logpoisson.parsing import PolySyntaxError, UnknownVariable, parse_poly, render_poly
from logpoisson.polynomial import BiPoly

from conftest import polys


def test_examples():
    assert parse_poly("y^3") == BiPoly.monomial(3, 0)
    p = parse_poly("3/2*x^2*y - 1")
    assert p == BiPoly({(1, 2): Fraction(3, 2), (0, 0): -1})
    assert render_poly(p) == "3/2*x^2*y - 1"


def test_unknown_variable():
    with pytest.raises(UnknownVariable) as info:
        parse_poly("x + z")
    assert info.value.name == "z"
    assert info.value.offset == 4


@pytest.mark.parametrize("text", ["", "x +", "x ^ -1", "(x", "x / y", "x / 0", "2 3"])
def test_syntax_errors(text):
    with pytest.raises(PolySyntaxError):
        parse_poly(text)


def test_grammar():
    assert parse_poly("-(x - y)^2") == parse_poly("-x^2 + 2*x*y - y^2")
    assert parse_poly("x*y/4 + 1/2") == BiPoly({(1, 1): Fraction(1, 4), (0, 0): Fraction(1, 2)})
    assert parse_poly("  x  ") == BiPoly.x()
    assert parse_poly("0") == BiPoly.zero()


def test_render_zero_and_signs():
    assert render_poly(BiPoly.zero()) == "0"
    assert render_poly(parse_poly("-x + y")) in ("-x + y", "y - x")


@given(polys(max_terms=8))
def test_round_trip(p):
    assert parse_poly(render_poly(p)) == p
