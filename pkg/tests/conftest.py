from fractions import Fraction

import hypothesis.strategies as st
from hypothesis import settings

from intgraphs.chart import QuadPoint
from intgraphs.numerics import squarefree_part
from intgraphs.triangles import IntegralTriangle

settings.register_profile("default", deadline=None)
settings.load_profile("default")

SQUAREFREE = [1, 2, 3, 5, 6, 7, 10, 11, 13, 14, 15, 35]

rationals = st.fractions(min_value=-20, max_value=20, max_denominator=12)
charts = st.sampled_from(SQUAREFREE)


@st.composite
def triangles(draw, max_side=30):
    c = draw(st.integers(1, max_side))
    b = draw(st.integers((c + 2) // 2, c))
    a = draw(st.integers(c - b + 1, b))
    return IntegralTriangle(a, b, c)


@st.composite
def chart_points(draw, n, k=None):
    k = draw(charts) if k is None else k
    return [QuadPoint(draw(rationals), draw(rationals), k) for _ in range(n)]


def pythagorean_rotation(m, n):
    """Exact rotation (cos, sin) with rational entries from a generator pair."""
    h = m * m + n * n
    return Fraction(m * m - n * n, h), Fraction(2 * m * n, h)


def rigid(p, cs, shift):
    """Rotate a k=1 point by (cos, sin) then translate."""
    c, s = cs
    return QuadPoint(c * p.x - s * p.y + shift[0], s * p.x + c * p.y + shift[1], p.k)


def hyperbola_pair(a, c, t1, t2, branch, cs=None, shift=(0, 0)):
    """Two points of x^2/a^2 - y^2/b^2 = 1 (foci at +-c) via x = a(t+1/t)/2,
    y = b(t-1/t)/2, in the chart where b is rational."""
    b2 = c * c - a * a
    k, root = squarefree_part(b2.numerator * b2.denominator)
    s = Fraction(root, b2.denominator)  # b = s*sqrt(k)

    def pt(t):
        return QuadPoint(branch * a * (t + 1 / t) / 2, s * (t - 1 / t) / 2, k)

    pts = [pt(t1), pt(t2), QuadPoint(-c, 0, k), QuadPoint(c, 0, k)]
    if cs is not None:
        assert k == 1
        pts = [rigid(p, cs, shift) for p in pts]
    else:
        pts = [QuadPoint(p.x + shift[0], p.y + shift[1], k) for p in pts]
    return pts
