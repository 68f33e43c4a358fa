"""Compare the compiled and pure-Python kernels.

    python3 benchmarks/bench_kernels.py [--pmax 40] [--repeat 3]

Times the cell solver over every triangle up to the given perimeter and the
integral-pair scan over the resulting extension points, once per backend,
and checks that both backends return identical results.
"""

import argparse
import time

from intgraphs import _pykernels, kernels
from intgraphs.extension import Frame, frame_solutions
from intgraphs.triangles import enumerate_integral_triangles


def _best(fn, repeat):
    best = float("inf")
    for _ in range(repeat):
        t0 = time.perf_counter()
        out = fn()
        best = min(best, time.perf_counter() - t0)
    return best, out


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--pmax", type=int, default=40)
    ap.add_argument("--repeat", type=int, default=3)
    args = ap.parse_args()

    if "native" not in kernels.available_backends():
        print("compiled kernels not built; only the Python backend is available")
        return
    from intgraphs import _kernels

    tris = enumerate_integral_triangles(args.pmax)
    cells = [(t.b, t.c, Frame.of(t).heron, Frame.of(t).u) for t in tris]
    pairs_in = []
    for t in tris:
        f = Frame.of(t)
        sols = frame_solutions(t)
        pairs_in.append(([s[0] for s in sols], [s[1] for s in sols], f.heron, f.scale))

    print(f"{len(tris)} triangles with perimeter <= {args.pmax}")
    print(f"{'kernel':<16}{'python s':>12}{'native s':>12}{'speedup':>10}")
    for name, py, nat, data in (
        ("solve_cells", _pykernels.solve_cells, _kernels.solve_cells, cells),
        ("integral_pairs", _pykernels.integral_pairs, _kernels.integral_pairs, pairs_in),
    ):
        tp, rp = _best(lambda: [py(*a) for a in data], args.repeat)
        tn, rn = _best(lambda: [nat(*a) for a in data], args.repeat)
        same = [sorted(x) for x in rp] == [sorted(x) for x in rn]
        print(f"{name:<16}{tp:>12.4f}{tn:>12.4f}{tp / tn:>9.1f}x{'' if same else '  MISMATCH'}")


if __name__ == "__main__":
    main()
