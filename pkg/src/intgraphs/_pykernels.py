"""Pure-Python kernels.  ``_kernels.pyx`` mirrors these with 128-bit C integers.

Both work in the integer frame of a canonically placed triangle: a chart
point ``(x, y)`` is stored as ``X = 2c*x``, ``Y = 2c*k*w*y`` where
``heron = k*w**2``.  In that frame ``|PQ|**2 = (heron*dX**2 + dY**2) / (4*c**2*heron)``.
"""

from math import isqrt


class DegenerateQuadratic(RuntimeError):
    pass


def _integer_roots(a2, b1, c0):
    """Integer roots of ``a2*r**2 + 2*b1*r + c0``."""
    if a2 == 0:
        if b1 == 0:
            if c0 == 0:
                raise DegenerateQuadratic("radius equation vanishes identically")
            return ()
        num, den = -c0, 2 * b1
        return (num // den,) if num % den == 0 else ()
    disc = b1 * b1 - a2 * c0
    if disc < 0:
        return ()
    s = isqrt(disc)
    if s * s != disc:
        return ()
    nums = (-b1 + s,) if s == 0 else (-b1 + s, -b1 - s)
    return tuple(n // a2 for n in nums if n % a2 == 0)


def solve_cells(b, c, heron, u):
    """All ``(r, e1, e2)`` with ``|XA| = r``, ``|XB| = r - e1``, ``|XC| = r - e2``.

    One cell per signed difference pair ``e1 in [-c, c]``, ``e2 in [-b, b]``.
    Radii equal to zero (X on a vertex) are dropped.
    """
    out = []
    c2 = c * c
    b2 = b * b
    four_c2_h = 4 * c2 * heron
    for e1 in range(-c, c + 1):
        p0 = c2 - e1 * e1
        p1 = 2 * e1
        hp1 = heron * p1
        up0 = u * p0
        ue1 = 2 * u * e1
        for e2 in range(-b, b + 1):
            q0 = 2 * c2 * (b2 - e2 * e2) - up0
            q1 = 4 * c2 * e2 - ue1
            a2 = hp1 * p1 + q1 * q1 - four_c2_h
            b1 = hp1 * p0 + q0 * q1
            c0 = heron * p0 * p0 + q0 * q0
            try:
                roots = _integer_roots(a2, b1, c0)
            except DegenerateQuadratic as exc:
                raise DegenerateQuadratic(f"{exc} at b={b} c={c} e1={e1} e2={e2}") from None
            for r in roots:
                if r >= 1 and r - e1 >= 1 and r - e2 >= 1:
                    out.append((r, e1, e2))
    return out


def root_bound(b, c, heron, u):
    """Upper bound on every real root ``|XA|`` over all cells."""
    best = 0
    c2 = c * c
    b2 = b * b
    for e1 in range(-c, c + 1):
        p0 = c2 - e1 * e1
        p1 = 2 * e1
        for e2 in range(-b, b + 1):
            q0 = 2 * c2 * (b2 - e2 * e2) - u * p0
            q1 = 4 * c2 * e2 - 2 * u * e1
            a2 = heron * p1 * p1 + q1 * q1 - 4 * c2 * heron
            b1 = heron * p0 * p1 + q0 * q1
            c0 = heron * p0 * p0 + q0 * q0
            if a2 == 0:
                if b1 != 0:
                    best = max(best, -(-abs(c0) // abs(2 * b1)))
                continue
            disc = b1 * b1 - a2 * c0
            if disc < 0:
                continue
            top = abs(b1) + isqrt(disc) + 1
            best = max(best, -(-top // abs(a2)))
    return best


def integral_pairs(xs, ys, heron, scale):
    """``(i, j, m)`` for every pair at integer distance ``m`` (``i < j``).

    ``scale = 4*c**2*heron``.
    """
    out = []
    n = len(xs)
    for i in range(n):
        xi = xs[i]
        yi = ys[i]
        for j in range(i + 1, n):
            dx = xs[j] - xi
            dy = ys[j] - yi
            num = heron * dx * dx + dy * dy
            if num % scale:
                continue
            q = num // scale
            m = isqrt(q)
            if m * m == q:
                out.append((i, j, m))
    return out
