from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from diffpoly.errors import InvalidInputError
from diffpoly.scalar import I, Scalar, format_scalar, parse_scalar

rationals = st.fractions(max_denominator=50).filter(lambda f: abs(f) < 10**6)
scalars = st.builds(Scalar, rationals, rationals)


@pytest.mark.parametrize(
    "value, text",
    [
        (Scalar(4), "4"),
        (Scalar(Fraction(-1, 2)), "-1/2"),
        (Scalar(Fraction(1, 2), Fraction(3, 4)), "1/2+3/4i"),
        (Scalar(0, -3), "0-3i"),
        (Scalar(Fraction(6, 4)), "3/2"),
    ],
)
def test_format(value, text):
    assert format_scalar(value) == text


@pytest.mark.parametrize(
    "text, value",
    [("3i", Scalar(0, 3)), ("-i", Scalar(0, -1)), ("1/2 + 3/4 i", Scalar(Fraction(1, 2), Fraction(3, 4))), ("-7", Scalar(-7))],
)
def test_parse_variants(text, value):
    assert parse_scalar(text) == value


@pytest.mark.parametrize("text", ["", "1/0", "abc", "1.5", "1/2/3", "2+"])
def test_parse_rejects(text):
    with pytest.raises(InvalidInputError):
        parse_scalar(text)


@given(scalars)
def test_roundtrip(s):
    assert parse_scalar(format_scalar(s)) == s


@given(scalars, scalars, scalars)
def test_field_axioms(a, b, c):
    assert (a + b) + c == a + (b + c)
    assert a * (b + c) == a * b + a * c
    assert a * b == b * a
    if b:
        assert (a / b) * b == a


def test_i_squared():
    assert I * I == -1
    assert Scalar(1, 1) * Scalar(1, -1) == 2
