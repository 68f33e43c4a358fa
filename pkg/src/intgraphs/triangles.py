"""Integral triangles: enumeration, canonical placement and heights."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property

from .chart import QuadPoint
from .numerics import squarefree_part


@dataclass(frozen=True, order=True)
class IntegralTriangle:
    a: int
    b: int
    c: int

    def __post_init__(self):
        a, b, c = self.a, self.b, self.c
        if not (1 <= a <= b <= c):
            raise ValueError(f"sides must satisfy 1 <= a <= b <= c, got {(a, b, c)}")
        if a + b < c + 1:
            raise ValueError(f"degenerate triangle {(a, b, c)}: need a + b >= c + 1")

    @classmethod
    def from_sides(cls, *sides: int) -> "IntegralTriangle":
        return cls(*sorted(sides))

    @property
    def sides(self) -> tuple[int, int, int]:
        return self.a, self.b, self.c

    @property
    def perimeter(self) -> int:
        return self.a + self.b + self.c

    @cached_property
    def heron_product(self) -> int:
        """``16 * area**2``."""
        a, b, c = self.a, self.b, self.c
        return (a + b + c) * (-a + b + c) * (a - b + c) * (a + b - c)

    @property
    def area2(self) -> Fraction:
        return Fraction(self.heron_product, 16)

    @property
    def characteristic(self) -> int:
        return squarefree_part(self.heron_product).squarefree

    @property
    def is_heronian(self) -> bool:
        return self.characteristic == 1


def enumerate_integral_triangles(p_max: int) -> list[IntegralTriangle]:
    """All integral triangles with perimeter at most ``p_max``.

    Sorted lexicographically by (longest side, shortest side, middle side).
    """
    out = []
    for a in range(1, p_max // 3 + 1):
        for b in range(a, (p_max - a) // 2 + 1):
            for c in range(b, min(a + b - 1, p_max - a - b) + 1):
                out.append(IntegralTriangle(a, b, c))
    out.sort(key=lambda t: (t.c, t.a, t.b))
    return out


def triangles_with_perimeter(p: int) -> list[IntegralTriangle]:
    return [t for t in enumerate_integral_triangles(p) if t.perimeter == p]


def placement_data(t: IntegralTriangle) -> tuple[int, int, int]:
    """``(k, w, u)`` with ``heron = k*w**2`` and ``u = b**2 + c**2 - a**2``.

    In the canonical placement ``C = (u/(2c), w/(2c))`` in chart ``k``.
    """
    k, w = squarefree_part(t.heron_product)
    return k, w, t.b ** 2 + t.c ** 2 - t.a ** 2


def place_triangle(t: IntegralTriangle) -> tuple[int, QuadPoint, QuadPoint, QuadPoint]:
    """Canonical placement A=(0,0), B=(c,0), C above the axis with |CA|=b, |CB|=a."""
    k, w, u = placement_data(t)
    two_c = 2 * t.c
    A = QuadPoint(Fraction(0), Fraction(0), k)
    B = QuadPoint(Fraction(t.c), Fraction(0), k)
    C = QuadPoint(Fraction(u, two_c), Fraction(w, two_c), k)
    return k, A, B, C


def min_height_squared(t: IntegralTriangle) -> Fraction:
    """Square of the height onto the longest side (the smallest height)."""
    return Fraction(t.heron_product, 4 * t.c * t.c)


def height_bound_check(t: IntegralTriangle) -> bool:
    return min_height_squared(t) >= t.a - Fraction(1, 4)


def height_bound_tight(t: IntegralTriangle) -> bool:
    return min_height_squared(t) == t.a - Fraction(1, 4)


def format_triangles(ts) -> str:
    return "".join(f"{t.a} {t.b} {t.c} {t.characteristic}\n" for t in ts)
