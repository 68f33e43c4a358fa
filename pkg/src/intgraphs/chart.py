"""Points of the plane in a single quadratic chart.

A chart with radicand ``k`` represents the Euclidean point ``(x, y*sqrt(k))``
by the rational pair ``(x, y)``.  Squared distances, collinearity and
concyclicity are then rational computations.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Iterator, NamedTuple, Optional, Sequence

from .numerics import (
    RationalLike,
    format_rational,
    is_squarefree,
    parse_rational,
    perfect_square_root,
)


class ChartMismatch(ValueError):
    pass


class DegenerateConfiguration(ValueError):
    """Input violates a geometric precondition (collinear, not on curve, ...)."""


@dataclass(frozen=True)
class Chart:
    k: int = 1

    def __post_init__(self):
        if not is_squarefree(self.k):
            raise ValueError(f"chart radicand must be squarefree and >= 1, got {self.k}")

    def point(self, x: RationalLike, y: RationalLike) -> "QuadPoint":
        return QuadPoint(Fraction(x), Fraction(y), self.k)


@dataclass(frozen=True, order=True)
class QuadPoint:
    x: Fraction
    y: Fraction
    k: int = 1

    def __post_init__(self):
        if not isinstance(self.x, Fraction):
            object.__setattr__(self, "x", Fraction(self.x))
        if not isinstance(self.y, Fraction):
            object.__setattr__(self, "y", Fraction(self.y))

    def __repr__(self):
        return f"QuadPoint({format_rational(self.x)}, {format_rational(self.y)}, k={self.k})"

    def embedded(self) -> tuple[float, float]:
        """Floating point Euclidean coordinates (display only)."""
        return float(self.x), float(self.y) * self.k ** 0.5


def _same_chart(*pts: QuadPoint) -> int:
    k = pts[0].k
    for p in pts[1:]:
        if p.k != k:
            raise ChartMismatch(f"points from charts k={k} and k={p.k}")
    return k


def dist2(p: QuadPoint, q: QuadPoint) -> Fraction:
    k = _same_chart(p, q)
    dx = p.x - q.x
    dy = p.y - q.y
    return dx * dx + k * dy * dy


def integer_distance(p: QuadPoint, q: QuadPoint) -> Optional[int]:
    r = perfect_square_root(dist2(p, q))
    if r is None or r.denominator != 1:
        return None
    return r.numerator


def rational_distance(p: QuadPoint, q: QuadPoint) -> Optional[Fraction]:
    return perfect_square_root(dist2(p, q))


def dot(u: QuadPoint, v: QuadPoint, origin: QuadPoint) -> Fraction:
    """Euclidean dot product of ``u - origin`` and ``v - origin``."""
    k = _same_chart(u, v, origin)
    return (u.x - origin.x) * (v.x - origin.x) + k * (u.y - origin.y) * (v.y - origin.y)


def chart_cross(p: QuadPoint, q: QuadPoint, r: QuadPoint) -> Fraction:
    """Cross product of ``q - p`` and ``r - p`` in chart coordinates.

    The Euclidean cross product is this value times ``sqrt(k)``, so signs and
    zeros agree.
    """
    _same_chart(p, q, r)
    return (q.x - p.x) * (r.y - p.y) - (q.y - p.y) * (r.x - p.x)


def orientation(p: QuadPoint, q: QuadPoint, r: QuadPoint) -> int:
    c = chart_cross(p, q, r)
    return (c > 0) - (c < 0)


def collinear(p: QuadPoint, q: QuadPoint, r: QuadPoint) -> bool:
    return chart_cross(p, q, r) == 0


def _det(m: list[list[Fraction]]) -> Fraction:
    # Fraction-exact Gaussian elimination.
    m = [row[:] for row in m]
    n = len(m)
    det = Fraction(1)
    for col in range(n):
        pivot = next((r for r in range(col, n) if m[r][col] != 0), None)
        if pivot is None:
            return Fraction(0)
        if pivot != col:
            m[col], m[pivot] = m[pivot], m[col]
            det = -det
        det *= m[col][col]
        for r in range(col + 1, n):
            f = m[r][col] / m[col][col]
            if f:
                for c in range(col, n):
                    m[r][c] -= f * m[col][c]
    return det


def concyclic(p: QuadPoint, q: QuadPoint, r: QuadPoint, s: QuadPoint) -> bool:
    k = _same_chart(p, q, r, s)
    for a, b, c in itertools.combinations((p, q, r, s), 3):
        if collinear(a, b, c):
            raise DegenerateConfiguration("three of the four points are collinear")
    rows = [[t.x * t.x + k * t.y * t.y, t.x, t.y, Fraction(1)] for t in (p, q, r, s)]
    return _det(rows) == 0


def _concyclic_unchecked(p, q, r, s) -> bool:
    k = p.k
    rows = [[t.x * t.x + k * t.y * t.y, t.x, t.y, Fraction(1)] for t in (p, q, r, s)]
    return _det(rows) == 0


@dataclass(frozen=True)
class PointSet:
    k: int
    points: tuple[QuadPoint, ...] = field(default_factory=tuple)

    def __post_init__(self):
        Chart(self.k)
        pts = tuple(self.points)
        object.__setattr__(self, "points", pts)
        for p in pts:
            if p.k != self.k:
                raise ChartMismatch(f"point {p} does not belong to chart k={self.k}")
        if len(set(pts)) != len(pts):
            raise ValueError("point set contains repeated points")

    @classmethod
    def of(cls, k: int, coords: Iterable[tuple[RationalLike, RationalLike]]) -> "PointSet":
        return cls(k, tuple(QuadPoint(Fraction(x), Fraction(y), k) for x, y in coords))

    def __len__(self):
        return len(self.points)

    def __iter__(self) -> Iterator[QuadPoint]:
        return iter(self.points)

    def __getitem__(self, i):
        return self.points[i]

    @property
    def chart(self) -> Chart:
        return Chart(self.k)

    def diameter2(self) -> Fraction:
        return max((dist2(p, q) for p, q in itertools.combinations(self.points, 2)), default=Fraction(0))

    def distance_multiset(self) -> list[Fraction]:
        """Sorted rational distances; raises if some distance is irrational."""
        out = []
        for p, q in itertools.combinations(self.points, 2):
            d = rational_distance(p, q)
            if d is None:
                raise ValueError(f"irrational distance between {p} and {q}")
            out.append(d)
        return sorted(out)

    def is_integral(self) -> bool:
        return all(integer_distance(p, q) is not None for p, q in itertools.combinations(self.points, 2))

    def to_text(self) -> str:
        return format_pointset(self)


def format_pointset(ps: PointSet, comments: Optional[Sequence[str]] = None) -> str:
    lines = [f"chart k={ps.k}"]
    for i, p in enumerate(ps.points):
        line = f"{format_rational(p.x)} {format_rational(p.y)}"
        if comments and comments[i]:
            line += f"  # {comments[i]}"
        lines.append(line)
    return "\n".join(lines) + "\n"


def parse_pointsets(text: str) -> list[PointSet]:
    """Parse one or more point sets; each starts with a ``chart k=<int>`` line.

    ``#`` starts a comment; lines of the form ``key=value ...`` are summary
    metadata and are skipped.
    """
    sets: list[PointSet] = []
    k: Optional[int] = None
    coords: list[tuple[Fraction, Fraction]] = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if line.startswith("chart"):
            if k is not None:
                sets.append(PointSet.of(k, coords))
            parts = line.split()
            if len(parts) != 2 or not parts[1].startswith("k="):
                raise ValueError(f"line {lineno}: bad chart header {raw!r}")
            k = int(parts[1][2:])
            coords = []
            continue
        if "=" in line:
            continue
        if k is None:
            raise ValueError(f"line {lineno}: point before chart header")
        parts = line.split()
        if len(parts) != 2:
            raise ValueError(f"line {lineno}: expected two rationals, got {raw!r}")
        coords.append((parse_rational(parts[0]), parse_rational(parts[1])))
    if k is not None:
        sets.append(PointSet.of(k, coords))
    return sets


def parse_pointset(text: str) -> PointSet:
    sets = parse_pointsets(text)
    if len(sets) != 1:
        raise ValueError(f"expected exactly one point set, found {len(sets)}")
    return sets[0]


def abt_general_position(ps: PointSet) -> bool:
    """No ``n-4`` points on a line and no ``n-3`` points on a circle.

    A line always passes through two points and a circle through three
    non-collinear points, so the conditions only bite once ``n-4 >= 3``
    (resp. ``n-3 >= 4``); below that they are treated as vacuous.
    """
    n = len(ps)
    if n < 4:
        raise ValueError("general position needs at least 4 points")
    pts = ps.points
    line_limit = n - 4
    if line_limit >= 3:
        for i, j in itertools.combinations(range(n), 2):
            on_line = 2 + sum(1 for t in range(n) if t != i and t != j and collinear(pts[i], pts[j], pts[t]))
            if on_line >= line_limit:
                return False
    circle_limit = n - 3
    if circle_limit >= 4:
        for i, j, l in itertools.combinations(range(n), 3):
            if collinear(pts[i], pts[j], pts[l]):
                continue
            on_circle = 3 + sum(
                1 for t in range(n)
                if t not in (i, j, l) and _concyclic_unchecked(pts[i], pts[j], pts[l], pts[t])
            )
            if on_circle >= circle_limit:
                return False
    return True


def ptolemy_check(p: QuadPoint, q: QuadPoint, r: QuadPoint, s: QuadPoint) -> bool:
    """Exact test of ``|PR|*|QS| == |PQ|*|RS| + |PS|*|QR|``.

    With A, B, C the squares of the three products, sqrt(A) = sqrt(B) + sqrt(C)
    iff A >= B + C and (A - B - C)**2 == 4*B*C.
    """
    if not concyclic(p, q, r, s):
        raise DegenerateConfiguration("ptolemy_check needs four concyclic points")
    A = dist2(p, r) * dist2(q, s)
    B = dist2(p, q) * dist2(r, s)
    C = dist2(p, s) * dist2(q, r)
    return A >= B + C and (A - B - C) ** 2 == 4 * B * C


# -- hyperbolas ---------------------------------------------------------------


@dataclass(frozen=True)
class HyperbolaSpec:
    """Locus ``| |XF1| - |XF2| | = diff``."""

    focus1: QuadPoint
    focus2: QuadPoint
    diff: Fraction

    def __post_init__(self):
        _same_chart(self.focus1, self.focus2)
        object.__setattr__(self, "diff", Fraction(self.diff))
        if self.focus1 == self.focus2:
            raise DegenerateConfiguration("hyperbola foci coincide")
        if self.diff < 0 or self.diff ** 2 > self.focal_dist2:
            raise DegenerateConfiguration(
                f"no locus: diff={self.diff} with focal distance^2={self.focal_dist2}"
            )

    @property
    def focal_dist2(self) -> Fraction:
        return dist2(self.focus1, self.focus2)

    @property
    def semi_axis_a(self) -> Fraction:
        return self.diff / 2

    @property
    def semi_focal_c2(self) -> Fraction:
        return self.focal_dist2 / 4

    @property
    def degenerate(self) -> bool:
        """True for the bisector (diff 0) and the two axis rays (diff = |F1F2|)."""
        return self.diff == 0 or self.diff ** 2 == self.focal_dist2

    @property
    def center(self) -> QuadPoint:
        f1, f2 = self.focus1, self.focus2
        return QuadPoint((f1.x + f2.x) / 2, (f1.y + f2.y) / 2, f1.k)


def hyperbola_membership(h: HyperbolaSpec, p: QuadPoint) -> bool:
    d1 = dist2(p, h.focus1)
    d2 = dist2(p, h.focus2)
    D2 = h.diff * h.diff
    s = d1 + d2 - D2
    return s >= 0 and s * s == 4 * d1 * d2


class ArcClass(NamedTuple):
    branch: int  # 1 or 2: the nearer focus; 0 on the bisector
    side: int  # +1 / -1: side of the focal axis
    vertex: bool  # on the focal axis; side forced to +1


def arc_class(h: HyperbolaSpec, p: QuadPoint) -> ArcClass:
    if not hyperbola_membership(h, p):
        raise DegenerateConfiguration(f"{p} is not on the hyperbola")
    d1 = dist2(p, h.focus1)
    d2 = dist2(p, h.focus2)
    branch = 1 if d1 < d2 else 2 if d2 < d1 else 0
    side = orientation(h.focus1, h.focus2, p)
    if side == 0:
        return ArcClass(branch, 1, True)
    return ArcClass(branch, side, False)


class Intercept(NamedTuple):
    ratio: Fraction  # signed position on the axis in units of F2 - F1, 0 at the center
    intercept2: Fraction  # squared distance from the center
    intercept: Optional[Fraction]  # signed distance from the center when rational
    within: bool  # |intercept| <= a


def secant_axis_intercept(p: QuadPoint, q: QuadPoint) -> Optional[Fraction]:
    """x-intercept of line pq in a frame whose focal axis is the x-axis."""
    if p.y == q.y:
        return None
    return (p.x * q.y - q.x * p.y) / (q.y - p.y)


def same_arc_secant_intercept(h: HyperbolaSpec, p: QuadPoint, q: QuadPoint) -> Optional[Intercept]:
    """Where the secant through two same-arc points meets the focal axis.

    Returns None when the secant is parallel to the axis.
    """
    if p == q:
        raise DegenerateConfiguration("secant needs two distinct points")
    cp, cq = arc_class(h, p), arc_class(h, q)
    if (cp.branch, cp.side) != (cq.branch, cq.side):
        raise DegenerateConfiguration("points lie on different arcs")
    f1, f2, m = h.focus1, h.focus2, h.center
    k = m.k
    wx, wy = f2.x - f1.x, f2.y - f1.y
    vx, vy = q.x - p.x, q.y - p.y
    denom = wx * vy - wy * vx
    if denom == 0:
        return None
    # m + ratio*w = p + mu*(q - p); cross both sides with (q - p).
    ratio = ((p.x - m.x) * vy - (p.y - m.y) * vx) / denom
    t2 = ratio * ratio * (wx * wx + k * wy * wy)
    root = perfect_square_root(t2)
    t = None if root is None else (root if ratio >= 0 else -root)
    return Intercept(ratio, t2, t, t2 <= h.semi_axis_a ** 2)


claim1_intercept = same_arc_secant_intercept
