"""Kernel dispatch: compiled extension when built, pure Python otherwise.

The compiled path is only taken when every intermediate provably fits in a
signed 128-bit integer; larger inputs silently use the Python kernels.
"""

from __future__ import annotations

from . import _pykernels

try:
    from . import _kernels as _native
except ImportError:  # extension not built
    _native = None

DegenerateQuadratic = _pykernels.DegenerateQuadratic

# With c <= 200 every quadratic coefficient and discriminant stays below 2**120.
NATIVE_MAX_SIDE = 200
_I64 = 2 ** 62
_I128 = 2 ** 125

_backend = "native" if _native is not None else "python"


def available_backends() -> list[str]:
    return ["native", "python"] if _native is not None else ["python"]


def backend() -> str:
    return _backend


def set_backend(name: str) -> None:
    global _backend
    if name not in available_backends():
        raise ValueError(f"backend {name!r} not available (have {available_backends()})")
    _backend = name


def solve_cells(b: int, c: int, heron: int, u: int) -> list[tuple[int, int, int]]:
    if _backend == "native" and c <= NATIVE_MAX_SIDE:
        return _native.solve_cells(b, c, heron, u)
    return _pykernels.solve_cells(b, c, heron, u)


def root_bound(b: int, c: int, heron: int, u: int) -> int:
    return _pykernels.root_bound(b, c, heron, u)


def integral_pairs(xs, ys, heron: int, scale: int) -> list[tuple[int, int, int]]:
    if _backend == "native" and xs:
        mx = max(abs(v) for v in xs)
        my = max(abs(v) for v in ys)
        if (
            mx < _I64 and my < _I64 and heron < _I64 and scale < _I128
            and heron * 4 * mx * mx + 4 * my * my < _I128
        ):
            return _native.integral_pairs(xs, ys, heron, scale)
    return _pykernels.integral_pairs(xs, ys, heron, scale)
