"""Exact integer and rational helpers.

``fractions.Fraction`` is the rational type throughout the package: it is
always reduced with a positive denominator, so equality and hashing are
structural.
"""

from __future__ import annotations

import re
from fractions import Fraction
from functools import lru_cache
from math import isqrt
from typing import NamedTuple, Optional, Union

Rational = Fraction
RationalLike = Union[int, Fraction]

_RATIONAL_RE = re.compile(r"^(-?\d+)(?:/(\d+))?$")


class SquarefreeDecomposition(NamedTuple):
    squarefree: int
    cofactor_root: int


def integer_sqrt_floor(n: int) -> int:
    """Largest ``s`` with ``s*s <= n``."""
    if n < 0:
        raise ValueError(f"integer_sqrt_floor of negative number {n}")
    return isqrt(n)


def is_square(n: int) -> bool:
    return n >= 0 and isqrt(n) ** 2 == n


def perfect_square_root(q: RationalLike) -> Optional[Fraction]:
    """Exact non-negative square root of ``q``, or None if it is irrational."""
    q = Fraction(q)
    if q < 0:
        raise ValueError(f"perfect_square_root of negative number {q}")
    # Fraction is reduced, so q is a rational square iff both parts are squares.
    sn = isqrt(q.numerator)
    if sn * sn != q.numerator:
        return None
    sd = isqrt(q.denominator)
    if sd * sd != q.denominator:
        return None
    return Fraction(sn, sd)


@lru_cache(maxsize=65536)
def squarefree_part(n: int) -> SquarefreeDecomposition:
    """Write ``n = squarefree * cofactor_root**2`` by trial division."""
    if n < 1:
        raise ValueError(f"squarefree_part needs a positive integer, got {n}")
    squarefree = 1
    root = 1
    p = 2
    while p * p <= n:
        if n % p == 0:
            e = 0
            while n % p == 0:
                n //= p
                e += 1
            root *= p ** (e // 2)
            if e % 2:
                squarefree *= p
        p += 1 if p == 2 else 2
    squarefree *= n
    return SquarefreeDecomposition(squarefree, root)


def is_squarefree(n: int) -> bool:
    return n >= 1 and squarefree_part(n).cofactor_root == 1


def ceil_sqrt(q: RationalLike) -> int:
    """Smallest integer ``m`` with ``m*m >= q`` (``q >= 0``)."""
    q = Fraction(q)
    if q < 0:
        raise ValueError("ceil_sqrt of negative number")
    m = isqrt(q.numerator // q.denominator)
    while m * m < q:
        m += 1
    return m


def floor_sqrt(q: RationalLike) -> int:
    q = Fraction(q)
    if q < 0:
        raise ValueError("floor_sqrt of negative number")
    return isqrt(q.numerator // q.denominator)


def parse_rational(text: str) -> Fraction:
    """Parse ``num/den`` or ``num``; unreduced input is accepted and reduced."""
    m = _RATIONAL_RE.match(text.strip())
    if m is None:
        raise ValueError(f"not a rational: {text!r}")
    num = int(m.group(1))
    den = int(m.group(2)) if m.group(2) is not None else 1
    if den == 0:
        raise ValueError(f"zero denominator: {text!r}")
    return Fraction(num, den)


def format_rational(q: RationalLike) -> str:
    q = Fraction(q)
    if q.denominator == 1:
        return str(q.numerator)
    return f"{q.numerator}/{q.denominator}"
