"""Points at integer distance from all three vertices of an integral triangle.

The solver follows the hyperbola argument literally.  For every pair of
signed distance differences ``e1 = |XA| - |XB|`` in ``[-|AB|, |AB|]`` and
``e2 = |XA| - |XC|`` in ``[-|AC|, |AC|]`` the two radical axes pin ``X`` to
an affine function of ``r = |XA|``; substituting into the circle about A
leaves a quadratic in ``r`` whose integer roots are the candidates.
"""

from __future__ import annotations

import itertools
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from fractions import Fraction
from math import isqrt
from typing import Callable, Iterable, Optional, Sequence, TypeVar

from . import kernels
from .chart import (
    PointSet,
    QuadPoint,
    _concyclic_unchecked,
    chart_cross,
    collinear,
    dist2,
    dot,
    integer_distance,
    rational_distance,
)
from .numerics import perfect_square_root
from .triangles import IntegralTriangle, enumerate_integral_triangles, placement_data

NO3LINE = "no3line"
NO4CIRCLE = "no3line+no4circle"
MODES = (NO3LINE, NO4CIRCLE)

T = TypeVar("T")
R = TypeVar("R")


def parallel_map(fn: Callable[[T], R], items: Sequence[T], jobs: int = 1) -> list[R]:
    """Ordered map; results do not depend on ``jobs``."""
    if jobs <= 1 or len(items) < 2:
        return [fn(x) for x in items]
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        return list(pool.map(fn, items, chunksize=max(1, len(items) // (4 * jobs))))


class ChartClosureError(AssertionError):
    """An extension point failed exact re-verification."""


@dataclass(frozen=True, order=True)
class ExtensionSolution:
    point: QuadPoint
    r1: int
    r2: int
    r3: int
    collinear_with: tuple[str, ...] = ()

    @property
    def radii(self) -> tuple[int, int, int]:
        return self.r1, self.r2, self.r3


def count_bound(t: IntegralTriangle) -> int:
    """Hyperbola-intersection bound ``4(|AB|+1)(|AC|+1)`` with AB = c and AC = b."""
    return 4 * (t.c + 1) * (t.b + 1)


@dataclass(frozen=True)
class Frame:
    """Integer frame of a canonically placed triangle (see ``_pykernels``)."""

    t: IntegralTriangle
    k: int
    w: int
    u: int

    @classmethod
    def of(cls, t: IntegralTriangle) -> "Frame":
        k, w, u = placement_data(t)
        return cls(t, k, w, u)

    @property
    def heron(self) -> int:
        return self.t.heron_product

    @property
    def scale(self) -> int:
        return 4 * self.t.c ** 2 * self.heron

    def vertices(self) -> tuple[tuple[int, int], tuple[int, int], tuple[int, int]]:
        c = self.t.c
        return (0, 0), (2 * c * c, 0), (self.u, self.heron)

    def coords(self, r: int, e1: int, e2: int) -> tuple[int, int]:
        c, b, u = self.t.c, self.t.b, self.u
        p0 = c * c - e1 * e1
        q0 = 2 * c * c * (b * b - e2 * e2) - u * p0
        q1 = 4 * c * c * e2 - 2 * u * e1
        return p0 + 2 * e1 * r, q0 + q1 * r

    def to_point(self, X: int, Y: int) -> QuadPoint:
        c = self.t.c
        return QuadPoint(Fraction(X, 2 * c), Fraction(Y, 2 * c * self.k * self.w), self.k)


def _frame_collinear(p, q, r) -> bool:
    return (q[0] - p[0]) * (r[1] - p[1]) - (q[1] - p[1]) * (r[0] - p[0]) == 0


_PAIR_NAMES = ("AB", "AC", "BC")


def frame_solutions(t: IntegralTriangle) -> list[tuple[int, int, int, int, int]]:
    """``(X, Y, r1, r2, r3)`` in the integer frame, sorted by chart position."""
    f = Frame.of(t)
    seen = {}
    for r, e1, e2 in kernels.solve_cells(t.b, t.c, f.heron, f.u):
        X, Y = f.coords(r, e1, e2)
        seen.setdefault((X, Y), (X, Y, r, r - e1, r - e2))
    # Frame X and Y are positive multiples of chart x and y.
    return [seen[key] for key in sorted(seen)]


def extension_candidates(t: IntegralTriangle, verify: bool = True) -> list[ExtensionSolution]:
    """Every point other than A, B, C at integer distance from all three.

    Uses the canonical placement ``A=(0,0)``, ``B=(c,0)``, ``C`` above the axis.
    With ``verify`` each point is re-checked with exact chart arithmetic.
    """
    f = Frame.of(t)
    A, B, C = f.vertices()
    if verify:
        k = f.k
        pa = f.to_point(*A)
        pb = f.to_point(*B)
        pc = f.to_point(*C)
    out = []
    for X, Y, r1, r2, r3 in frame_solutions(t):
        pt = f.to_point(X, Y)
        if verify:
            got = (integer_distance(pt, pa), integer_distance(pt, pb), integer_distance(pt, pc))
            if got != (r1, r2, r3) or pt.k != k:
                raise ChartClosureError(f"{t.sides}: {pt} expected radii {(r1, r2, r3)}, got {got}")
        flags = tuple(
            name for name, (P, Q) in zip(_PAIR_NAMES, ((A, B), (A, C), (B, C)))
            if _frame_collinear(P, Q, (X, Y))
        )
        out.append(ExtensionSolution(pt, r1, r2, r3, flags))
    return out


def _fraction_roots(a2: Fraction, b2: Fraction, c2: Fraction) -> list[int]:
    """Integer roots of ``a2*r**2 + b2*r + c2`` with rational coefficients."""
    den = 1
    for q in (a2, b2, c2):
        den = den * q.denominator // _gcd(den, q.denominator)
    A, B, C = (int(q * den) for q in (a2, b2, c2))
    if A == 0:
        if B == 0:
            if C == 0:
                raise kernels.DegenerateQuadratic("radius equation vanishes identically")
            return []
        return [-C // B] if C % B == 0 else []
    disc = B * B - 4 * A * C
    if disc < 0:
        return []
    s = isqrt(disc)
    if s * s != disc:
        return []
    nums = {-B + s, -B - s}
    return sorted(n // (2 * A) for n in nums if n % (2 * A) == 0)


def _gcd(a: int, b: int) -> int:
    while b:
        a, b = b, a % b
    return a


def extension_points(A: QuadPoint, B: QuadPoint, C: QuadPoint) -> list[ExtensionSolution]:
    """Same as :func:`extension_candidates` for an arbitrary placement.

    A, B, C must lie in one chart, be non-collinear and have pairwise integer
    distances.  Works with exact fractions throughout.
    """
    k = A.k
    ab, ac, bc = integer_distance(A, B), integer_distance(A, C), integer_distance(B, C)
    if None in (ab, ac, bc):
        raise ValueError("base triangle must have integer side lengths")
    if collinear(A, B, C):
        raise ValueError("base triangle is degenerate")
    nA = A.x * A.x + k * A.y * A.y
    nB = B.x * B.x + k * B.y * B.y
    nC = C.x * C.x + k * C.y * C.y
    # 2(Bx-Ax) x + 2k(By-Ay) y = 2 e1 r - e1^2 - (nA - nB), same for C.
    m11, m12 = 2 * (B.x - A.x), 2 * k * (B.y - A.y)
    m21, m22 = 2 * (C.x - A.x), 2 * k * (C.y - A.y)
    det = m11 * m22 - m12 * m21
    seen: dict[QuadPoint, ExtensionSolution] = {}
    for e1 in range(-ab, ab + 1):
        for e2 in range(-ac, ac + 1):
            v0 = (-e1 * e1 - (nA - nB), -e2 * e2 - (nA - nC))
            v1 = (2 * e1, 2 * e2)
            # x = x0 + x1 r, y = y0 + y1 r by Cramer's rule.
            x0 = (v0[0] * m22 - m12 * v0[1]) / det
            x1 = (v1[0] * m22 - m12 * v1[1]) / det
            y0 = (m11 * v0[1] - v0[0] * m21) / det
            y1 = (m11 * v1[1] - v1[0] * m21) / det
            dx0, dy0 = x0 - A.x, y0 - A.y
            qa = x1 * x1 + k * y1 * y1 - 1
            qb = 2 * (dx0 * x1 + k * dy0 * y1)
            qc = dx0 * dx0 + k * dy0 * dy0
            for r in _fraction_roots(qa, qb, qc):
                if r < 1 or r - e1 < 1 or r - e2 < 1:
                    continue
                pt = QuadPoint(x0 + x1 * r, y0 + y1 * r, k)
                r3 = integer_distance(pt, C)
                if (integer_distance(pt, A), integer_distance(pt, B), r3) != (r, r - e1, r - e2):
                    raise ChartClosureError(f"{pt} failed re-verification")
                flags = tuple(
                    name for name, (P, Q) in zip(_PAIR_NAMES, ((A, B), (A, C), (B, C)))
                    if collinear(P, Q, pt)
                )
                seen.setdefault(pt, ExtensionSolution(pt, r, r - e1, r - e2, flags))
    return [seen[p] for p in sorted(seen)]


def extension_oracle(t: IntegralTriangle, r_cap: int) -> list[ExtensionSolution]:
    """Brute force over radius pairs ``(r1, r2)``; independent of the cell solver."""
    c = t.c
    k, w, u = placement_data(t)
    A = QuadPoint(Fraction(0), Fraction(0), k)
    B = QuadPoint(Fraction(c), Fraction(0), k)
    C = QuadPoint(Fraction(u, 2 * c), Fraction(w, 2 * c), k)
    found = {}
    for r1 in range(1, r_cap + 1):
        for r2 in range(max(1, r1 - c), r1 + c + 1):
            x = Fraction(r1 * r1 - r2 * r2 + c * c, 2 * c)
            y2 = (r1 * r1 - x * x) / k
            if y2 < 0:
                continue
            y = perfect_square_root(y2)
            if y is None:
                continue
            for yy in {y, -y}:
                pt = QuadPoint(x, yy, k)
                r3 = integer_distance(pt, C)
                if r3 is None or r3 == 0:
                    continue
                flags = tuple(
                    name for name, (P, Q) in zip(_PAIR_NAMES, ((A, B), (A, C), (B, C)))
                    if collinear(P, Q, pt)
                )
                found[pt] = ExtensionSolution(pt, r1, r2, r3, flags)
    return [found[p] for p in sorted(found)]


def root_bound(t: IntegralTriangle) -> int:
    """Upper bound on ``|XA|`` over every real root of every cell quadratic."""
    k, w, u = placement_data(t)
    return kernels.root_bound(t.b, t.c, t.heron_product, u)


# -- cliques -----------------------------------------------------------------


def _check_mode(mode: str) -> None:
    if mode not in MODES:
        raise ValueError(f"unknown mode {mode!r}; expected one of {MODES}")


def _compatible(pt: QuadPoint, chosen: Sequence[QuadPoint], mode: str) -> bool:
    for p, q in itertools.combinations(chosen, 2):
        if collinear(p, q, pt):
            return False
    if mode == NO4CIRCLE:
        for p, q, r in itertools.combinations(chosen, 3):
            if _concyclic_unchecked(p, q, r, pt):
                return False
    return True


def satisfies_mode(points: Sequence[QuadPoint], mode: str) -> bool:
    _check_mode(mode)
    for i in range(len(points)):
        if not _compatible(points[i], points[:i], mode):
            return False
    return True


def _find_base_triangle(points: Sequence[QuadPoint]) -> tuple[int, int, int]:
    for i, j, l in itertools.combinations(range(len(points)), 3):
        if not collinear(points[i], points[j], points[l]):
            return i, j, l
    raise ValueError("every triple of the base is collinear")


def _clique_search(base, cands, dist_ok, size, mode):
    """Backtracking in candidate order; yields lists of chosen candidate indices."""
    need = size - len(base)

    def rec(start, chosen_idx, chosen_pts):
        if len(chosen_idx) == need:
            yield list(chosen_idx)
            return
        for i in range(start, len(cands)):
            if len(cands) - i < need - len(chosen_idx):
                return
            if any(not dist_ok(j, i) for j in chosen_idx):
                continue
            pt = cands[i]
            if not _compatible(pt, chosen_pts, mode):
                continue
            chosen_idx.append(i)
            chosen_pts.append(pt)
            yield from rec(i + 1, chosen_idx, chosen_pts)
            chosen_idx.pop()
            chosen_pts.pop()

    yield from rec(0, [], list(base))


def grow_cliques(base: PointSet, target_size: int, diameter_cap: int, mode: str = NO3LINE) -> list[PointSet]:
    """All integral supersets of ``base`` of the given size and diameter cap.

    Every added point is at integer distance from a non-collinear triple of
    the base, so the candidates are exactly that triple's extension points.
    """
    _check_mode(mode)
    pts = list(base.points)
    if len(pts) < 3:
        raise ValueError("base needs at least three points")
    if not base.is_integral():
        raise ValueError("base is not an integral point set")
    i, j, l = _find_base_triangle(pts)
    cap2 = diameter_cap * diameter_cap
    if base.diameter2() > cap2 or not satisfies_mode(pts, mode):
        return []
    if target_size <= len(pts):
        return [base] if target_size == len(pts) else []
    base_set = set(pts)
    cands = []
    for sol in extension_points(pts[i], pts[j], pts[l]):
        p = sol.point
        if p in base_set:
            continue
        if any(integer_distance(p, q) is None or dist2(p, q) > cap2 for q in pts):
            continue
        if _compatible(p, pts, mode):
            cands.append(p)
    cands.sort()
    n = len(cands)
    ok = [[False] * n for _ in range(n)]
    for a, b in itertools.combinations(range(n), 2):
        d = integer_distance(cands[a], cands[b])
        ok[a][b] = ok[b][a] = d is not None and d * d <= cap2

    out = []
    for idx in _clique_search(pts, cands, lambda a, b: ok[a][b], target_size, mode):
        out.append(PointSet(base.k, tuple(pts) + tuple(cands[t] for t in idx)))
    return out


def canonical_form(ps: PointSet) -> tuple[int, tuple[QuadPoint, ...]]:
    """Congruence-class key: lexicographic minimum over all placements.

    A placement puts point i at the origin and point j on the positive
    x-axis (optionally reflected); the key is the sorted placed point tuple.
    """
    pts = ps.points
    k = ps.k
    best = None
    for i, j in itertools.permutations(range(len(pts)), 2):
        d = rational_distance(pts[i], pts[j])
        if d is None:
            raise ValueError("canonical_form needs rational distances")
        P, Q = pts[i], pts[j]
        xs = [dot(X, Q, P) / d for X in pts]
        ys = [chart_cross(P, Q, X) / d for X in pts]
        for sign in (1, -1):
            placed = tuple(sorted(QuadPoint(x, sign * y, k) for x, y in zip(xs, ys)))
            if best is None or placed < best:
                best = placed
    return k, best


def _triangle_min_sets(args):
    t, n, cap, mode = args
    f = Frame.of(t)
    A, B, C = f.vertices()
    base = [f.to_point(*A), f.to_point(*B), f.to_point(*C)]
    cands = []
    radii = {}
    for X, Y, r1, r2, r3 in frame_solutions(t):
        if max(r1, r2, r3) > cap:
            continue
        if any(_frame_collinear(P, Q, (X, Y)) for P, Q in ((A, B), (A, C), (B, C))):
            continue
        pt = f.to_point(X, Y)
        if mode == NO4CIRCLE and _concyclic_unchecked(*base, pt):
            continue
        cands.append(pt)
        radii[pt] = max(r1, r2, r3)
    m = len(cands)
    dist = [[None] * m for _ in range(m)]
    for a, b in itertools.combinations(range(m), 2):
        d = integer_distance(cands[a], cands[b])
        if d is not None and d <= cap:
            dist[a][b] = dist[b][a] = d
    best = None
    sets = []
    for idx in _clique_search(base, cands, lambda a, b: dist[a][b] is not None, n, mode):
        diam = max([t.c] + [radii[cands[a]] for a in idx] + [dist[a][b] for a, b in itertools.combinations(idx, 2)])
        if best is None or diam < best:
            best, sets = diam, []
        if diam == best:
            sets.append(PointSet(f.k, tuple(base) + tuple(cands[a] for a in idx)))
    return best, sets


def min_diameter_search(
    n: int, diameter_cap: int, mode: str = NO3LINE, jobs: int = 1
) -> Optional[tuple[int, PointSet]]:
    """Smallest diameter of an ``n``-point integral set in the given mode.

    Exhaustive over base triangles with longest side at most the cap; the
    witness is the canonical form minimising :func:`canonical_form`.
    """
    _check_mode(mode)
    if n < 3:
        raise ValueError("n must be at least 3")
    tris = [t for t in enumerate_integral_triangles(3 * diameter_cap) if t.c <= diameter_cap]
    if not tris:
        return None
    if n == 3:
        best_t = min(tris, key=lambda t: (t.c, t.sides))
        f = Frame.of(best_t)
        pts = PointSet(f.k, tuple(f.to_point(*v) for v in f.vertices()))
        return best_t.c, _canonical_pointset(pts)
    results = parallel_map(_triangle_min_sets, [(t, n, diameter_cap, mode) for t in tris], jobs)
    found = [(d, s) for d, ss in results if d is not None for s in ss]
    if not found:
        return None
    best = min(d for d, _ in found)
    witness = min((_canonical_pointset(s) for d, s in found if d == best), key=lambda ps: canonical_form(ps))
    return best, witness


def _canonical_pointset(ps: PointSet) -> PointSet:
    k, pts = canonical_form(ps)
    return PointSet(k, pts)


def integer_distance_multiset(ps: PointSet) -> list[int]:
    out = []
    for p, q in itertools.combinations(ps.points, 2):
        d = integer_distance(p, q)
        if d is None:
            raise ValueError("not an integral point set")
        out.append(d)
    return sorted(out)
