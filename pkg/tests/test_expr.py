from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from polyrel.expr import ParseError, parse_expression
from polyrel.ratfunc import RatFunc


def test_parse_simple():
    f = parse_expression("x + 1")
    assert f.equivalent(RatFunc.var("x") + 1)


def test_parse_rational_literal():
    assert parse_expression("3/4").constant_value() == Fraction(3, 4)


def test_parse_precedence():
    f = parse_expression("1 + 2*x^2 - x/2")
    x = RatFunc.var("x")
    assert f.equivalent(1 + 2 * x * x - x / 2)


def test_parse_unary_minus_and_powers():
    f = parse_expression("-x^2")
    x = RatFunc.var("x")
    assert f.equivalent(-(x * x))
    g = parse_expression("(1 - c*t)*a/(a - t)")
    a, c, t = RatFunc.var("a"), RatFunc.var("c"), RatFunc.var("t")
    assert g.equivalent((1 - c * t) * a / (a - t))


def test_parse_negative_exponent():
    f = parse_expression("x^-2")
    x = RatFunc.var("x")
    assert f.equivalent(1 / (x * x))


def test_exponent_limit_enforced():
    with pytest.raises(ParseError):
        parse_expression("x^65")
    parse_expression("x^64")  # at the limit is fine


def test_parse_errors():
    for bad in ["", "x +", "(x", "x^y", "x$y", "x 2"]:
        with pytest.raises(ParseError):
            parse_expression(bad)


@given(
    st.integers(-9, 9),
    st.integers(-9, 9),
    st.integers(1, 9),
    st.integers(0, 5),
)
@settings(max_examples=60, deadline=None)
def test_serialize_roundtrip(a, b, d, e):
    x, y = RatFunc.var("x"), RatFunc.var("y")
    f = (a + b * x + x.pow_int(e) * y) / (RatFunc.from_value(d) + y * y)
    back = parse_expression(f.serialize())
    assert back.equivalent(f)
