"""Rational-distance sets on circles and the conditional non-rationality argument."""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from fractions import Fraction
from functools import cmp_to_key
from math import gcd, lcm
from typing import Iterator, NamedTuple

from .chart import PointSet, QuadPoint, chart_cross, ptolemy_check, rational_distance
from .graphs import DistanceGraph


class PythAngle(NamedTuple):
    """Sine and cosine of a half-angle, from the generator ``(m, n)``."""

    s: Fraction
    c: Fraction
    m: int
    n: int


def _generators() -> Iterator[tuple[int, int]]:
    m = 2
    while True:
        for n in range(1, m):
            if (m - n) % 2 == 1 and gcd(m, n) == 1:
                yield m, n
        m += 1


def pythagorean_angles(count: int) -> list[PythAngle]:
    if count < 1:
        raise ValueError("count must be positive")
    out = []
    for m, n in _generators():
        h = m * m + n * n
        legs = sorted((2 * m * n, m * m - n * n))
        out.append(PythAngle(Fraction(legs[0], h), Fraction(legs[1], h), m, n))
        if len(out) == count:
            return out
    raise AssertionError("unreachable")


def rational_circle_points(n: int) -> PointSet:
    """``n`` points ``(c^2 - s^2, 2sc)`` on the unit circle, all chords rational.

    The chord between the points of half-angles ``a`` and ``b`` is
    ``2|sin(a - b)| = 2|s_a c_b - c_a s_b|``.
    """
    if n < 2:
        raise ValueError("need at least two points")
    pts = tuple(QuadPoint(a.c * a.c - a.s * a.s, 2 * a.s * a.c, 1) for a in pythagorean_angles(n))
    return PointSet(1, pts)


def chord(a: PythAngle, b: PythAngle) -> Fraction:
    return 2 * abs(a.s * b.c - a.c * b.s)


class IrrationalChord(ValueError):
    pass


def scale_to_integral(ps: PointSet) -> PointSet:
    """Scale by the lcm of all chord denominators so every distance is an integer."""
    factor = scale_factor(ps)
    return PointSet(ps.k, tuple(QuadPoint(p.x * factor, p.y * factor, p.k) for p in ps))


def scale_factor(ps: PointSet) -> int:
    factor = 1
    for i, j in itertools.combinations(range(len(ps)), 2):
        d = rational_distance(ps[i], ps[j])
        if d is None:
            raise IrrationalChord(f"points {i} and {j} are at irrational distance")
        factor = lcm(factor, d.denominator)
    return factor


def ptolemy_deduce(pr: Fraction, qs: Fraction, ps_: Fraction, qr: Fraction, rs: Fraction) -> Fraction:
    """Side PQ of the convex cyclic quadrilateral PQRS from the other five lengths."""
    rs = Fraction(rs)
    if rs == 0:
        raise ValueError("RS must be non-zero")
    pq = (Fraction(pr) * qs - Fraction(ps_) * qr) / rs
    if pq <= 0:
        raise ValueError(f"inconsistent orientation: deduced PQ = {pq}")
    return pq


def cyclic_order(points, center: QuadPoint) -> list:
    """Sort points counter-clockwise around ``center`` (exact)."""

    def half(p):
        dx, dy = p.x - center.x, p.y - center.y
        return 0 if (dy > 0 or (dy == 0 and dx > 0)) else 1

    def cmp(p, q):
        hp, hq = half(p), half(q)
        if hp != hq:
            return hp - hq
        cr = chart_cross(center, p, q)
        return -1 if cr > 0 else 1 if cr < 0 else 0

    return sorted(points, key=cmp_to_key(cmp))


# -- the two-clique graph -------------------------------------------------------------


def nonrational_graph(N: int) -> DistanceGraph:
    """Two copies of ``K_{N+4}`` sharing a ``K_N``.

    Vertices ``0..N-1`` form the core, ``N..N+3`` the first wing and
    ``N+4..N+7`` the second; the wings are not joined to each other.
    """
    if N < 1:
        raise ValueError("N must be positive")
    core = list(range(N))
    wing1 = list(range(N, N + 4))
    wing2 = list(range(N + 4, N + 8))
    edges = set()
    for group in (core + wing1, core + wing2):
        edges.update(itertools.combinations(group, 2))
    return DistanceGraph(N + 8, frozenset(edges))


@dataclass
class TranscriptStep:
    text: str
    kind: str  # "count" or "ptolemy"
    data: dict = field(default_factory=dict)

    def check(self) -> bool:
        return _CHECKS[self.kind](self.data)


@dataclass
class NonRationalityTranscript:
    N: int
    graph: DistanceGraph
    steps: list[TranscriptStep]
    conclusion: str

    def verify(self) -> bool:
        return all(step.check() for step in self.steps)

    def to_text(self) -> str:
        lines = [
            f"# conditional certificate, hypothesis: every rational point set with at least "
            f"{self.N} points has all but at most four on a line or all but at most three on a circle",
            f"graph: two K_{self.N + 4} sharing K_{self.N}; vertices={self.graph.vertex_count} "
            f"edges={len(self.graph.edges)}",
        ]
        for i, step in enumerate(self.steps, 1):
            lines.append(f"{i}. {step.text} CHECK: {'ok' if step.check() else 'FAILED'}")
        lines.append(f"conclusion: {self.conclusion}")
        return "\n".join(lines) + "\n"


def _check_count(d: dict) -> bool:
    N = d["N"]
    M = N + 4
    return (
        d["clique"] == M
        and d["line_min"] == M - 4 and d["line_min"] >= 3
        and d["circle_min"] == M - 3
        and d["core_on_circle"] == d["circle_min"] - 4
        and d["shared"] == 2 * d["core_on_circle"] - N and d["shared"] >= 3
        and d["wing_on_circle"] == d["circle_min"] - N and d["wing_on_circle"] >= 1
        and d["core_on_common"] == d["circle_min"] - 4 and d["core_on_common"] >= 2
    )


def _check_ptolemy(d: dict) -> bool:
    P, Q, R, S = d["points"]
    order = d["order"]
    named = dict(zip("PQRS", (P, Q, R, S)))
    quad = [named[ch] for ch in order]
    if not ptolemy_check(*quad):
        return False
    five = {name: rational_distance(named[name[0]], named[name[1]]) for name in ("PR", "PS", "QR", "QS", "RS")}
    if any(v is None or v != d["five"][name] for name, v in five.items()):
        return False
    pq = deduce_pq(order, five)
    return pq == d["pq"] == rational_distance(P, Q)


def deduce_pq(order: str, five: dict) -> Fraction:
    """PQ from the five other distances of concyclic P, Q, R, S in the given cyclic order."""
    PR, PS, QR, QS, RS = (five[n] for n in ("PR", "PS", "QR", "QS", "RS"))
    if order == "PQRS":  # PQ is a side, diagonals PR and QS
        return ptolemy_deduce(PR, QS, PS, QR, RS)
    if order == "PRQS":  # PQ is a diagonal: PQ*RS = PR*QS + PS*QR
        return (PR * QS + PS * QR) / RS
    if order == "PQSR":  # PQ is a side, diagonals PS and QR: PS*QR = PQ*RS + PR*QS
        return ptolemy_deduce(PS, QR, PR, QS, RS)
    raise ValueError(f"unknown cyclic order {order!r}")


_CHECKS = {"count": _check_count, "ptolemy": _check_ptolemy}


def _ptolemy_instance(order: str) -> dict:
    """Concrete rational-circle witness of the deduction for one cyclic order."""
    pts = cyclic_order(list(rational_circle_points(4).points), QuadPoint(0, 0, 1))
    named = dict(zip(order, pts))
    P, Q, R, S = (named[ch] for ch in "PQRS")
    five = {name: rational_distance(named[name[0]], named[name[1]]) for name in ("PR", "PS", "QR", "QS", "RS")}
    return {"points": (P, Q, R, S), "order": order, "five": five, "pq": deduce_pq(order, five)}


def nonrationality_transcript(N: int) -> NonRationalityTranscript:
    if N < 9:
        raise ValueError(
            f"N={N}: the two circles are only forced to share 2N-6-N = {N - 6} core points; "
            "at least 3 are needed to identify the circles, so N >= 9"
        )
    M = N + 4
    counts = {
        "N": N, "clique": M, "line_min": M - 4, "circle_min": M - 3,
        "core_on_circle": M - 7, "shared": 2 * (M - 7) - N,
        "wing_on_circle": M - 3 - N, "core_on_common": M - 7,
    }
    steps = [
        TranscriptStep(
            f"Each K_{M} is a rational point set of {M} >= {N} points, so all but at most four "
            f"are collinear or all but at most three are concyclic.",
            "count", counts,
        ),
        TranscriptStep(
            f"The line option puts {M - 4} >= 3 points on a line, which a realization forbids; "
            f"so >= {M - 3} of {M} lie on a circle (C1 for the first clique, C2 for the second).",
            "count", counts,
        ),
        TranscriptStep(
            f"At most 4 wing points lie on each circle, so each circle holds >= {M - 7} core points; "
            f"{M - 7}+{M - 7}-{N} = {2 * (M - 7) - N} >= 3 core points lie on both, hence C1 = C2 = C.",
            "count", counts,
        ),
        TranscriptStep(
            f"C holds >= {M - 3} - {N} = {M - 3 - N} point of each wing (P in wing 1, Q in wing 2) "
            f"and >= {M - 7} >= 2 core points R, S.",
            "count", counts,
        ),
    ]
    for order, desc in (
        ("PQRS", "PQ a side: PQ = (PR*QS - PS*QR)/RS"),
        ("PRQS", "PQ a diagonal: PQ = (PR*QS + PS*QR)/RS"),
        ("PQSR", "PQ a side: PQ = (PS*QR - PR*QS)/RS"),
    ):
        inst = _ptolemy_instance(order)
        five = ", ".join(f"{k}={v}" for k, v in inst["five"].items())
        steps.append(TranscriptStep(
            f"Cyclic order {order}, {desc}; PR, PS, QR, QS, RS are edges hence rational. "
            f"Witness on a rational circle: {five} gives PQ={inst['pq']}.",
            "ptolemy", inst,
        ))
    return NonRationalityTranscript(
        N, nonrational_graph(N), steps,
        "PQ is rational in every cyclic order, contradicting the non-edge PQ; "
        "under the hypothesis the graph has no rational realization.",
    )
