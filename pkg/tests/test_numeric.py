import math
from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from htdet.numeric import (
    binomial,
    exact_div,
    format_int,
    format_rational,
    multinomial,
    parse_int,
    parse_rational,
    signed_power,
)


@pytest.mark.parametrize("n,k,expected", [(6, 3, 20), (5, -1, 0), (0, 0, 1), (4, 5, 0)])
def test_binomial_examples(n, k, expected):
    assert binomial(n, k) == expected


def test_binomial_rejects_negative_n():
    with pytest.raises(ValueError):
        binomial(-1, 0)


def test_binomial_symmetry_and_pascal_exhaustive():
    for n in range(31):
        for k in range(n + 1):
            assert binomial(n, k) == binomial(n, n - k)
            if n >= 1:
                assert binomial(n, k) == binomial(n - 1, k - 1) + binomial(n - 1, k)


@pytest.mark.parametrize("parts,expected", [([1, 1], 2), ([2, 0, 1], 3), ([0], 1), ([], 1)])
def test_multinomial_examples(parts, expected):
    assert multinomial(parts) == expected


@given(st.lists(st.integers(0, 8), min_size=1, max_size=5))
def test_multinomial_matches_factorials(parts):
    expected = math.factorial(sum(parts))
    for p in parts:
        expected //= math.factorial(p)
    assert multinomial(parts) == expected


def test_multinomial_reduces_to_binomial():
    for n in range(20):
        for k in range(n + 1):
            assert multinomial([k, n - k]) == binomial(n, k)


@pytest.mark.parametrize("base,exp,expected", [(-1, 3, -1), (-1, 0, 1), (2, 5, 32), (0, 0, 1)])
def test_signed_power(base, exp, expected):
    assert signed_power(base, exp) == expected


def test_exact_div_refuses_remainder():
    assert exact_div(12, 4) == 3
    with pytest.raises(ArithmeticError):
        exact_div(7, 2)


@given(st.integers(-10**6, 10**6), st.integers(1, 10**6), st.integers(-10**6, 10**6), st.integers(1, 10**6))
def test_rational_normalization(p, q, r, s):
    a, b = Fraction(p, q), Fraction(r, s)
    for v in (a + b, a - b, a * b) + ((a / b,) if b else ()):
        assert v.denominator > 0
        assert math.gcd(abs(v.numerator), v.denominator) == 1


@given(st.integers())
def test_int_roundtrip(v):
    assert parse_int(format_int(v)) == v


@given(st.fractions())
def test_rational_roundtrip(v):
    text = format_rational(v)
    assert "/" in text
    assert parse_rational(text) == v


@pytest.mark.parametrize("bad", ["1,000", "+5", "1.0", "", "--3", "x"])
def test_parse_int_rejects(bad):
    with pytest.raises(ValueError):
        parse_int(bad)
