# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""128-bit integer versions of the kernels in ``_pykernels``.

Callers must respect the magnitude limits checked in ``kernels``; inside
those limits every intermediate fits in a signed 128-bit integer.
"""

from libc.math cimport sqrtl
from libc.stdlib cimport malloc, free

cdef extern from *:
    ctypedef long long i128 "__int128"

from ._pykernels import DegenerateQuadratic


cdef inline i128 _isqrt(i128 n):
    cdef i128 s = <i128>sqrtl(<long double>n)
    while s * s > n:
        s -= 1
    while (s + 1) * (s + 1) <= n:
        s += 1
    return s


cdef inline int _roots(i128 a2, i128 b1, i128 c0, i128* out) except -1:
    cdef i128 disc, s, num, den
    cdef int count = 0
    if a2 == 0:
        if b1 == 0:
            if c0 == 0:
                raise DegenerateQuadratic("radius equation vanishes identically")
            return 0
        num = -c0
        den = 2 * b1
        if num % den == 0:
            out[0] = num / den
            return 1
        return 0
    disc = b1 * b1 - a2 * c0
    if disc < 0:
        return 0
    s = _isqrt(disc)
    if s * s != disc:
        return 0
    num = -b1 + s
    if num % a2 == 0:
        out[count] = num / a2
        count += 1
    if s != 0:
        num = -b1 - s
        if num % a2 == 0:
            out[count] = num / a2
            count += 1
    return count


def solve_cells(long long b, long long c, long long heron, long long u):
    cdef list out = []
    cdef i128 c2 = <i128>c * c
    cdef i128 b2 = <i128>b * b
    cdef i128 h = heron
    cdef i128 four_c2_h = 4 * c2 * h
    cdef i128 p0, p1, q0, q1, a2, b1, c0, r
    cdef i128 roots[2]
    cdef long long e1, e2
    cdef int n, t
    for e1 in range(-c, c + 1):
        p0 = c2 - <i128>e1 * e1
        p1 = 2 * <i128>e1
        for e2 in range(-b, b + 1):
            q0 = 2 * c2 * (b2 - <i128>e2 * e2) - <i128>u * p0
            q1 = 4 * c2 * e2 - 2 * <i128>u * e1
            a2 = h * p1 * p1 + q1 * q1 - four_c2_h
            b1 = h * p0 * p1 + q0 * q1
            c0 = h * p0 * p0 + q0 * q0
            try:
                n = _roots(a2, b1, c0, roots)
            except DegenerateQuadratic as exc:
                raise DegenerateQuadratic(f"{exc} at b={b} c={c} e1={e1} e2={e2}") from None
            for t in range(n):
                r = roots[t]
                if r >= 1 and r - e1 >= 1 and r - e2 >= 1:
                    out.append((<long long>r, e1, e2))
    return out


def integral_pairs(xs, ys, long long heron, scale):
    cdef Py_ssize_t n = len(xs), i, j
    cdef long long* cx = <long long*>malloc(n * sizeof(long long))
    cdef long long* cy = <long long*>malloc(n * sizeof(long long))
    cdef i128 sc = 0, num, q, m, dx, dy
    cdef i128 h = heron
    cdef list out = []
    if cx == NULL or cy == NULL:
        free(cx)
        free(cy)
        raise MemoryError()
    try:
        # scale may exceed 64 bits; assemble it from two halves
        hi = scale >> 62
        lo = scale - (hi << 62)
        sc = ((<i128>(<long long>hi)) << 62) + <long long>lo
        for i in range(n):
            cx[i] = xs[i]
            cy[i] = ys[i]
        for i in range(n):
            for j in range(i + 1, n):
                dx = <i128>cx[j] - cx[i]
                dy = <i128>cy[j] - cy[i]
                num = h * dx * dx + dy * dy
                if num % sc != 0:
                    continue
                q = num / sc
                m = _isqrt(q)
                if m * m == q:
                    out.append((i, j, <long long>m))
    finally:
        free(cx)
        free(cy)
    return out
