from fractions import Fraction
from math import isqrt

import pytest
from hypothesis import given
import hypothesis.strategies as st

from intgraphs.numerics import (
    ceil_sqrt,
    floor_sqrt,
    format_rational,
    integer_sqrt_floor,
    is_square,
    is_squarefree,
    parse_rational,
    perfect_square_root,
    squarefree_part,
)


@pytest.mark.parametrize("n, want", [(0, 0), (25, 5), (26, 5), (1, 1), (10**40, 10**20)])
def test_integer_sqrt_floor_examples(n, want):
    assert integer_sqrt_floor(n) == want


def test_integer_sqrt_floor_negative():
    with pytest.raises(ValueError):
        integer_sqrt_floor(-1)


@given(st.integers(0, 10**30))
def test_integer_sqrt_floor_brackets(n):
    s = integer_sqrt_floor(n)
    assert s * s <= n < (s + 1) ** 2


@pytest.mark.parametrize(
    "q, want",
    [
        (Fraction(25, 4), Fraction(5, 2)),
        (2, None),
        (Fraction(4326400, 17850625), Fraction(2080, 4225)),
        (0, 0),
        (Fraction(2, 8), Fraction(1, 2)),
    ],
)
def test_perfect_square_root_examples(q, want):
    assert perfect_square_root(q) == want


def test_perfect_square_root_negative():
    with pytest.raises(ValueError):
        perfect_square_root(Fraction(-1, 4))


@given(st.fractions(min_value=0, max_value=10**6, max_denominator=10**4))
def test_square_root_of_square(q):
    assert perfect_square_root(q * q) == q


@given(st.fractions(min_value=0, max_value=10**6, max_denominator=10**4))
def test_perfect_square_root_squares_back(q):
    r = perfect_square_root(q)
    if r is not None:
        assert r >= 0 and r * r == q
    else:
        assert not (is_square(q.numerator) and is_square(q.denominator))


@pytest.mark.parametrize("n, want", [(48, (3, 4)), (135, (15, 3)), (1, (1, 1)), (2, (2, 1)), (72, (2, 6))])
def test_squarefree_part_examples(n, want):
    assert tuple(squarefree_part(n)) == want


@given(st.integers(1, 10**7))
def test_squarefree_part_recombines(n):
    k, r = squarefree_part(n)
    assert k * r * r == n
    assert is_squarefree(k)


def test_squarefree_part_rejects_nonpositive():
    with pytest.raises(ValueError):
        squarefree_part(0)


@given(st.integers(1, 10**5))
def test_is_squarefree_matches_definition(n):
    brute = all(n % (p * p) for p in range(2, isqrt(n) + 1))
    assert is_squarefree(n) == brute


@given(st.fractions(min_value=0, max_value=10**4, max_denominator=50))
def test_ceil_and_floor_sqrt(q):
    c, f = ceil_sqrt(q), floor_sqrt(q)
    assert c * c >= q and (c == 0 or (c - 1) ** 2 < q)
    assert f * f <= q < (f + 1) ** 2


@pytest.mark.parametrize(
    "text, want", [("3", Fraction(3)), ("-7/4", Fraction(-7, 4)), ("6/8", Fraction(3, 4)), (" 0/5 ", Fraction(0))]
)
def test_parse_rational(text, want):
    assert parse_rational(text) == want


@pytest.mark.parametrize("text", ["1/0", "a", "1.5", "3/-4", ""])
def test_parse_rational_rejects(text):
    with pytest.raises(ValueError):
        parse_rational(text)


@given(st.fractions(max_denominator=10**6))
def test_rational_text_round_trip(q):
    assert parse_rational(format_rational(q)) == q
