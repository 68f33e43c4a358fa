"""Computable versions of the non-integrality bound functions and certificates.

``F_bound(p)``
    largest perimeter of a non-collinear integral triangle whose three
    vertices all extend some integral triangle of perimeter at most ``p``.
``L_bound(j, p)``
    bound on the pendant count at spine position ``j`` given a first
    triangle of perimeter ``p``.
``H_bound(d)``
    number of colours used by the three-round common-neighbour colouring
    for foci at distance ``d``.
``FStar_bound(p, i)``
    ``F`` iterated ``i - 1`` times from ``p``.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import Hashable, Optional, Sequence, Union

from . import kernels
from .chart import (
    DegenerateConfiguration,
    HyperbolaSpec,
    QuadPoint,
    arc_class,
    collinear,
    dist2,
    integer_distance,
)
from .extension import Frame, extension_oracle, frame_solutions, parallel_map, root_bound
from .numerics import ceil_sqrt, format_rational, is_square, perfect_square_root
from .triangles import IntegralTriangle, enumerate_integral_triangles


# -- F, L, F* -----------------------------------------------------------------


@lru_cache(maxsize=None)
def best_extension_triangle(t: IntegralTriangle) -> int:
    """Largest perimeter of a non-collinear integral triple of extension points of ``t``."""
    sols = frame_solutions(t)
    if len(sols) < 3:
        return 0
    f = Frame.of(t)
    xs = [s[0] for s in sols]
    ys = [s[1] for s in sols]
    adj: dict[int, dict[int, int]] = {i: {} for i in range(len(sols))}
    for i, j, m in kernels.integral_pairs(xs, ys, f.heron, f.scale):
        adj[i][j] = m
        adj[j][i] = m
    best = 0
    for i in adj:
        for j, mij in adj[i].items():
            if j <= i:
                continue
            for l, mjl in adj[j].items():
                if l <= j or l not in adj[i]:
                    continue
                per = mij + mjl + adj[i][l]
                if per <= best:
                    continue
                if (xs[j] - xs[i]) * (ys[l] - ys[i]) != (ys[j] - ys[i]) * (xs[l] - xs[i]):
                    best = per
    return best


def best_extension_triangle_oracle(t: IntegralTriangle) -> int:
    """Same quantity via the brute-force oracle and chart arithmetic."""
    pts = [s.point for s in extension_oracle(t, root_bound(t))]
    best = 0
    for p, q, r in itertools.combinations(pts, 3):
        d = [integer_distance(p, q), integer_distance(q, r), integer_distance(p, r)]
        if None in d or collinear(p, q, r):
            continue
        best = max(best, sum(d))
    return best


def F_bound(p: int, jobs: int = 1) -> int:
    if p < 3:
        return 0
    tris = enumerate_integral_triangles(p)
    if jobs > 1:
        return max(parallel_map(best_extension_triangle, tris, jobs), default=0)
    return max((best_extension_triangle(t) for t in tris), default=0)


def F_bound_oracle(p: int) -> int:
    if p < 3:
        return 0
    return max((best_extension_triangle_oracle(t) for t in enumerate_integral_triangles(p)), default=0)


def n_bound(p: int) -> int:
    """Bound ``4p**2`` on the pendant vertices a triangle of perimeter ``p`` supports."""
    if p < 0:
        raise ValueError("perimeter must be non-negative")
    return 4 * p * p


def perimeter_chain(p: int, length: int, jobs: int = 1) -> list[int]:
    """``[q1, ..., q_length]`` with ``q1 = p`` and ``q_{t+1} = F(q_t)``; 0 once dead."""
    chain = [p if p >= 3 else 0]
    while len(chain) < length:
        q = chain[-1]
        chain.append(F_bound(q, jobs) if q >= 3 else 0)
    return chain


def L_bound(j: int, p: int, jobs: int = 1) -> int:
    if j < 1:
        raise ValueError("j must be at least 1")
    if p < 3:
        return 0
    q = perimeter_chain(p, j, jobs)[-1]
    return n_bound(q) if q >= 3 else 0


def spine_n(i: int, jobs: int = 1) -> int:
    if i < 1:
        raise ValueError("i must be at least 1")
    return L_bound(i, i, jobs) + 1


def FStar_bound(p: int, i: int, jobs: int = 1) -> int:
    if i < 1:
        raise ValueError("i must be at least 1")
    return perimeter_chain(p, i, jobs)[-1]


# -- H and the colouring --------------------------------------------------------


def H_bound(d: Union[int, Fraction]) -> int:
    """Colour budget of the three-round colouring at focal distance ``d``.

    ``4(m+1)`` arc classes times ``2d'-1`` greedy colours, plus at most
    ``8(d'-1)(m+1)`` special points, with ``m = floor(d)``, ``d' = d**2 + 1``.
    """
    d = Fraction(d)
    if d < 1:
        raise ValueError("H_bound needs d >= 1")
    m = math.floor(d)
    dp = d * d + 1
    return 4 * (m + 1) * (2 * math.ceil(dp) - 1) + 8 * math.ceil(dp - 1) * (m + 1)


Color = Hashable


@dataclass
class ColoringCertificate:
    focus1: QuadPoint
    focus2: QuadPoint
    threshold: Fraction  # |F1F2|**2 + 1
    assignment: list[tuple[QuadPoint, Color]] = field(default_factory=list)

    @property
    def color_count(self) -> int:
        return len({c for _, c in self.assignment})

    @property
    def bound(self) -> int:
        return H_bound(ceil_sqrt(dist2(self.focus1, self.focus2)))

    def violations(self) -> list[tuple[QuadPoint, QuadPoint]]:
        bad = []
        for (p, cp), (q, cq) in itertools.combinations(self.assignment, 2):
            if cp == cq and integer_distance(p, q) is not None:
                bad.append((p, q))
        return bad

    def is_proper(self) -> bool:
        return not self.violations()


def _color_label(color: Color) -> str:
    if color[0] == "special":
        return f"S{color[1]}"
    D, branch, side, g = color
    return f"D{D}.B{branch}{'+' if side > 0 else '-'}.g{g}"


def format_certificate(cert: ColoringCertificate) -> str:
    lines = [
        f"{format_rational(p.x)} {format_rational(p.y)} -> {_color_label(c)}"
        for p, c in cert.assignment
    ]
    lines.append(f"colors={cert.color_count} bound={cert.bound}")
    return "\n".join(lines) + "\n"


def common_neighbor_coloring(F1: QuadPoint, F2: QuadPoint, pts: Sequence[QuadPoint]) -> ColoringCertificate:
    """Proper colouring of the integer-distance graph on common neighbours of two foci.

    Round 1 colours by hyperbola (difference D) and arc; round 2 greedily
    separates same-arc points at integer distance below ``d' = |F1F2|**2 + 1``;
    round 3 gives unique colours to points within ``d'`` of a focus.
    """
    if F1 == F2:
        raise DegenerateConfiguration("foci coincide")
    threshold = dist2(F1, F2) + 1
    radii = []
    for p in pts:
        if p in (F1, F2):
            raise DegenerateConfiguration(f"{p} coincides with a focus")
        r1, r2 = integer_distance(p, F1), integer_distance(p, F2)
        if r1 is None or r2 is None:
            raise DegenerateConfiguration(f"{p} is not at integer distance from both foci")
        if collinear(F1, F2, p):
            raise DegenerateConfiguration(f"{p} is collinear with the foci")
        radii.append((r1, r2))
    if len(set(pts)) != len(pts):
        raise DegenerateConfiguration("repeated points")

    classes: dict[tuple, list[int]] = {}
    for idx, (p, (r1, r2)) in enumerate(zip(pts, radii)):
        D = abs(r1 - r2)
        arc = arc_class(HyperbolaSpec(F1, F2, Fraction(D)), p)
        classes.setdefault((D, arc.branch, arc.side), []).append(idx)

    greedy: dict[int, int] = {}
    for members in classes.values():
        members = sorted(members, key=lambda i: (pts[i].x, pts[i].y))
        for pos, i in enumerate(members):
            used = set()
            for j in members[:pos]:
                m = integer_distance(pts[i], pts[j])
                if m is not None and m < threshold:
                    used.add(greedy[j])
            g = 0
            while g in used:
                g += 1
            greedy[i] = g

    cert = ColoringCertificate(F1, F2, threshold)
    specials = 0
    for idx, p in enumerate(pts):
        r1, r2 = radii[idx]
        if r1 < threshold or r2 < threshold:
            color: Color = ("special", specials)
            specials += 1
        else:
            D = abs(r1 - r2)
            arc = arc_class(HyperbolaSpec(F1, F2, Fraction(D)), p)
            color = (D, arc.branch, arc.side, greedy[idx])
        cert.assignment.append((p, color))
    bad = cert.violations()
    if bad:
        raise AssertionError(f"colouring is not proper: {bad[:3]}")
    return cert


def common_neighbours(F1: QuadPoint, F2: QuadPoint, count: int, r_max: int = 2000) -> list[QuadPoint]:
    """First ``count`` chart points (by increasing ``|XF1|``) at integer distance
    from both foci and off the focal line."""
    if integer_distance(F1, F2) is None:
        raise ValueError("foci must be at integer distance")
    k = F1.k
    c = integer_distance(F1, F2)
    out: list[QuadPoint] = []
    # Work in a frame with F1 at the origin and F2 on the positive x-axis,
    # then map back; the frame change is a rational similarity of the chart.
    ux, uy = (F2.x - F1.x) / c, (F2.y - F1.y) / c
    for r1 in range(1, r_max + 1):
        for r2 in range(max(1, r1 - c + 1), r1 + c):
            # x = N/(2c); the perpendicular offset squared is M/(4c^2) and must
            # equal k*s^2 with s rational, i.e. M*k must be a perfect square.
            N = r1 * r1 - r2 * r2 + c * c
            M = 4 * c * c * r1 * r1 - N * N
            if M <= 0 or not is_square(M * k):
                continue
            x = Fraction(N, 2 * c)
            s = perfect_square_root(Fraction(M, 4 * c * c * k))
            for sign in (1, -1):
                # Euclidean point F1 + x*u + sign*s*sqrt(k)*n with n the unit normal.
                px = F1.x + x * ux - sign * s * k * uy
                py = F1.y + x * uy + sign * s * ux
                out.append(QuadPoint(px, py, k))
            if len(out) >= count:
                return out[:count]
    return out


# -- apex certificate -----------------------------------------------------------


@dataclass(frozen=True)
class ApexBoundCertificate:
    chromatic_lower_bound: int
    excluded_separation: int  # T
    graph_id: str = "apex(core)"

    def statement(self) -> str:
        T = self.excluded_separation
        if T == 0:
            return "no apex separation excluded"
        return f"any integral realization places the apexes at distance > {T}"

    def verify(self) -> bool:
        T, chi = self.excluded_separation, self.chromatic_lower_bound
        below = T == 0 or H_bound(T) < chi
        return below and H_bound(T + 1) >= chi


def apex_lower_bound(core_chromatic_lb: int) -> ApexBoundCertificate:
    if core_chromatic_lb < 1:
        raise ValueError("chromatic lower bound must be positive")
    T = 0
    while H_bound(T + 1) < core_chromatic_lb:
        T += 1
    return ApexBoundCertificate(core_chromatic_lb, T)


# -- tables -----------------------------------------------------------------------


def format_bounds_table(p_max: int, j_max: int, d_max: int, i_max: int, jobs: int = 1) -> str:
    lines = ["# F(p)", f"{'p':>4} {'F':>8}"]
    for p in range(3, p_max + 1):
        lines.append(f"{p:>4} {F_bound(p, jobs):>8}")
    lines += ["", "# L(j,p)", f"{'p':>4} " + " ".join(f"{'j=' + str(j):>10}" for j in range(1, j_max + 1))]
    for p in range(3, p_max + 1):
        chain = perimeter_chain(p, j_max, jobs)
        lines.append(f"{p:>4} " + " ".join(f"{(n_bound(q) if q >= 3 else 0):>10}" for q in chain))
    lines += ["", "# F*(p,i)", f"{'p':>4} " + " ".join(f"{'i=' + str(i):>8}" for i in range(1, i_max + 1))]
    for p in range(3, p_max + 1):
        chain = perimeter_chain(p, i_max, jobs)
        lines.append(f"{p:>4} " + " ".join(f"{q:>8}" for q in chain))
    lines += ["", "# H(d)", f"{'d':>4} {'H':>10}"]
    for d in range(1, d_max + 1):
        lines.append(f"{d:>4} {H_bound(d):>10}")
    lines += ["", "# spine n_i = L(i,i)+1", f"{'i':>4} {'n_i':>10}"]
    for i in range(1, i_max + 1):
        lines.append(f"{i:>4} {spine_n(i, jobs):>10}")
    return "\n".join(lines) + "\n"
