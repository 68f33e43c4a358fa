from fractions import Fraction as Fr

import pytest
from hypothesis import given

from conftest import triangles
from intgraphs.chart import QuadPoint, dist2
from intgraphs.triangles import (
    IntegralTriangle,
    enumerate_integral_triangles,
    format_triangles,
    height_bound_check,
    height_bound_tight,
    min_height_squared,
    place_triangle,
    triangles_with_perimeter,
)

T = IntegralTriangle


def test_validation():
    with pytest.raises(ValueError):
        T(1, 1, 2)
    with pytest.raises(ValueError):
        T(3, 2, 4)
    assert T.from_sides(4, 2, 3) == T(2, 3, 4)


def test_derived_quantities():
    t = T(3, 4, 5)
    assert t.perimeter == 12 and t.heron_product == 576 and t.area2 == 36
    assert t.characteristic == 1 and t.is_heronian
    assert T(2, 3, 4).characteristic == 15
    assert T(1, 1, 1).characteristic == 3


def test_enumeration_small():
    assert enumerate_integral_triangles(3) == [T(1, 1, 1)]
    assert enumerate_integral_triangles(2) == []
    want = [(1, 1, 1), (1, 2, 2), (2, 2, 2), (1, 3, 3), (2, 2, 3), (2, 3, 3), (3, 3, 3), (1, 4, 4), (2, 3, 4)]
    assert [t.sides for t in enumerate_integral_triangles(9)] == want


def test_enumeration_matches_brute_force():
    p_max = 40
    brute = {
        (a, b, c)
        for a in range(1, p_max)
        for b in range(a, p_max)
        for c in range(b, p_max)
        if a + b > c and a + b + c <= p_max
    }
    got = [t.sides for t in enumerate_integral_triangles(p_max)]
    assert len(got) == len(set(got)) and set(got) == brute


@pytest.mark.parametrize("p", range(3, 61))
def test_fewer_than_p_squared_per_perimeter(p):
    assert len(triangles_with_perimeter(p)) < p * p


@pytest.mark.parametrize(
    "sides, k, C",
    [
        ((3, 4, 5), 1, (Fr(16, 5), Fr(12, 5))),
        ((1, 1, 1), 3, (Fr(1, 2), Fr(1, 2))),
        ((2, 3, 4), 15, (Fr(21, 8), Fr(3, 8))),
    ],
)
def test_placement_examples(sides, k, C):
    got_k, A, B, Cp = place_triangle(T(*sides))
    assert got_k == k
    assert A == QuadPoint(0, 0, k) and B == QuadPoint(sides[2], 0, k)
    assert (Cp.x, Cp.y) == C


@given(triangles(60))
def test_placement_realizes_side_lengths(t):
    k, A, B, C = place_triangle(t)
    assert dist2(A, B) == t.c ** 2
    assert dist2(A, C) == t.b ** 2
    assert dist2(B, C) == t.a ** 2
    assert C.y > 0


@pytest.mark.parametrize(
    "sides, h2", [((1, 1, 1), Fr(3, 4)), ((2, 2, 3), Fr(7, 4)), ((2, 3, 4), Fr(135, 64)), ((3, 4, 5), Fr(576, 100))]
)
def test_min_height_examples(sides, h2):
    assert min_height_squared(T(*sides)) == h2
    assert height_bound_check(T(*sides))


def test_height_bound_exhaustive_with_equality_profile():
    tight = []
    for t in enumerate_integral_triangles(200):
        assert height_bound_check(t), t
        if height_bound_tight(t):
            tight.append(t)
    family = [t for t in enumerate_integral_triangles(200) if t.a == t.b and t.c == 2 * t.a - 1]
    assert tight == family and len(family) > 0


def test_format_triangles():
    assert format_triangles([T(2, 3, 4), T(3, 4, 5)]) == "2 3 4 15\n3 4 5 1\n"
