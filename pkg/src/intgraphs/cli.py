"""Command line entry point.

Exit status: 0 success, 1 negative verdict, 2 invalid input.
"""

from __future__ import annotations

import argparse
import sys
from fractions import Fraction
from typing import Optional, Sequence

from . import certificates as cert
from . import extension as ext
from . import rational as rat
from .chart import HyperbolaSpec, PointSet, format_pointset, parse_pointset
from .graphs import INTEGRAL, RATIONAL, format_graph, parse_graph, verify_realization
from .svg import render_svg
from .triangles import IntegralTriangle, enumerate_integral_triangles, format_triangles, place_triangle


class InputError(Exception):
    pass


def _read(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    try:
        with open(path, encoding="utf-8") as fh:
            return fh.read()
    except OSError as exc:
        raise InputError(str(exc)) from None


def _emit(text: str, out: Optional[str]) -> None:
    if out:
        with open(out, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _triangle(sides) -> IntegralTriangle:
    try:
        return IntegralTriangle.from_sides(*sides)
    except ValueError as exc:
        raise InputError(str(exc)) from None


def _extension_block(t: IntegralTriangle) -> tuple[str, int]:
    sols = ext.extension_candidates(t)
    k, *_ = place_triangle(t)
    ps = PointSet(k, tuple(s.point for s in sols))
    comments = [
        f"r={s.r1},{s.r2},{s.r3}" + (f" collinear {'/'.join(s.collinear_with)}" if s.collinear_with else "")
        for s in sols
    ]
    return format_pointset(ps, comments), len(sols)


def cmd_enumerate_triangles(args) -> int:
    _emit(format_triangles(enumerate_integral_triangles(args.pmax)), args.out)
    return 0


def cmd_extend(args) -> int:
    if args.triangle:
        t = _triangle(args.triangle)
        block, count = _extension_block(t)
        _emit(block + f"count={count} bound={ext.count_bound(t)}\n", args.out)
        return 0
    if args.perimeter is None:
        raise InputError("extend needs --triangle or --perimeter")
    tris = enumerate_integral_triangles(args.perimeter)
    blocks = ext.parallel_map(_extension_block, tris, args.jobs)
    parts = []
    violations = 0
    for t, (block, count) in zip(tris, blocks):
        bound = ext.count_bound(t)
        violations += count > bound
        parts.append(f"# triangle {t.a} {t.b} {t.c}\n{block}count={count} bound={bound}\n")
    parts.append(f"triangles={len(tris)} violations={violations}\n")
    _emit("".join(parts), args.out)
    return 0 if violations == 0 else 1


def cmd_grow(args) -> int:
    if args.base:
        base = parse_pointset(_read(args.base))
    elif args.triangle:
        k, A, B, C = place_triangle(_triangle(args.triangle))
        base = PointSet(k, (A, B, C))
    else:
        raise InputError("grow needs --triangle or --base")
    try:
        sets = ext.grow_cliques(base, args.size, args.cap, args.mode)
    except ValueError as exc:
        raise InputError(str(exc)) from None
    _emit("".join(format_pointset(s) for s in sets) + f"count={len(sets)}\n", args.out)
    return 0


def cmd_search_min_diameter(args) -> int:
    res = ext.min_diameter_search(args.n, args.cap, args.mode, jobs=args.jobs)
    if res is None:
        _emit("diameter=none\n", args.out)
        return 1
    diam, witness = res
    dists = " ".join(map(str, ext.integer_distance_multiset(witness)))
    _emit(f"diameter={diam}\n# distances {dists}\n" + format_pointset(witness), args.out)
    return 0


def cmd_bounds_table(args) -> int:
    _emit(cert.format_bounds_table(args.pmax, args.jmax, args.dmax, args.imax, jobs=args.jobs), args.out)
    return 0


_VERTEX = {"A": 1, "B": 2, "C": 3}


def cmd_color_cert(args) -> int:
    if args.points:
        ps = parse_pointset(_read(args.points))
        if len(ps) < 2:
            raise InputError("point file must start with the two foci")
        F1, F2, pts = ps[0], ps[1], list(ps.points[2:])
    else:
        if not args.triangle:
            raise InputError("color-cert needs --triangle or a point file")
        placed = place_triangle(_triangle(args.triangle))
        foci = args.foci.upper()
        if len(foci) != 2 or any(ch not in _VERTEX for ch in foci) or foci[0] == foci[1]:
            raise InputError(f"--foci must name two vertices, e.g. AB (got {args.foci!r})")
        F1, F2 = placed[_VERTEX[foci[0]]], placed[_VERTEX[foci[1]]]
        pts = cert.common_neighbours(F1, F2, args.count, args.rmax)
    try:
        c = cert.common_neighbor_coloring(F1, F2, pts)
    except ValueError as exc:
        raise InputError(str(exc)) from None
    _emit(cert.format_certificate(c), args.out)
    return 0 if c.color_count <= c.bound else 1


def cmd_rational_circle(args) -> int:
    if args.n < 2:
        raise InputError("--n must be at least 2")
    _emit(format_pointset(rat.rational_circle_points(args.n)), args.out)
    return 0


def cmd_scale(args) -> int:
    ps = parse_pointset(_read(args.points))
    try:
        scaled = rat.scale_to_integral(ps)
    except rat.IrrationalChord as exc:
        raise InputError(str(exc)) from None
    _emit(format_pointset(scaled) + f"factor={rat.scale_factor(ps)}\n", args.out)
    return 0


def cmd_verify(args) -> int:
    ps = parse_pointset(_read(args.points))
    g, mapping = parse_graph(_read(args.graph))
    try:
        g = g.with_realization(ps, mapping)
    except ValueError as exc:
        raise InputError(str(exc)) from None
    report = verify_realization(g, args.mode)
    _emit(report.to_text(), args.out)
    return 0 if report.passed else 1


def cmd_nonrational_cert(args) -> int:
    try:
        t = rat.nonrationality_transcript(args.N)
    except ValueError as exc:
        raise InputError(str(exc)) from None
    text = t.to_text()
    if args.graph_out:
        with open(args.graph_out, "w", encoding="utf-8") as fh:
            fh.write(format_graph(t.graph))
    _emit(text, args.out)
    return 0 if t.verify() else 1


def cmd_render_svg(args) -> int:
    points = parse_pointset(_read(args.points)) if args.points else None
    hyps = []
    labels = {}
    if args.triangle:
        t = _triangle(args.triangle)
        k, A, B, C = place_triangle(t)
        dmax = t.c if args.dmax is None else min(args.dmax, t.c)
        hyps = [HyperbolaSpec(A, B, Fraction(D)) for D in range(dmax + 1)]
        labels = {C: "C"}
        if points is None:
            points = PointSet(k, tuple(s.point for s in ext.extension_candidates(t)))
    _emit(render_svg(points, hyps, labels), args.out)
    return 0


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="intgraphs", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True)

    def add(name, func, help_):
        sp = sub.add_parser(name, help=help_)
        sp.set_defaults(func=func)
        sp.add_argument("--out", help="write output to this file instead of stdout")
        return sp

    sp = add("enumerate-triangles", cmd_enumerate_triangles, "list integral triangles as 'a b c k'")
    sp.add_argument("--pmax", type=int, required=True)

    sp = add("extend", cmd_extend, "integer-distance extension points of integral triangles")
    sp.add_argument("--triangle", type=int, nargs=3, metavar=("A", "B", "C"))
    sp.add_argument("--perimeter", type=int, help="sweep every triangle with perimeter at most this")
    sp.add_argument("--jobs", type=int, default=1)

    sp = add("grow", cmd_grow, "extend a base integral point set to larger cliques")
    sp.add_argument("--triangle", type=int, nargs=3, metavar=("A", "B", "C"))
    sp.add_argument("--base", help="base point set file")
    sp.add_argument("--size", type=int, required=True)
    sp.add_argument("--cap", type=int, required=True)
    sp.add_argument("--mode", choices=ext.MODES, default=ext.NO3LINE)
    sp.add_argument("--jobs", type=int, default=1)

    sp = add("search-min-diameter", cmd_search_min_diameter, "minimal diameter integral point set")
    sp.add_argument("--n", type=int, required=True)
    sp.add_argument("--cap", type=int, required=True)
    sp.add_argument("--mode", choices=ext.MODES, default=ext.NO3LINE)
    sp.add_argument("--jobs", type=int, default=1)

    sp = add("bounds-table", cmd_bounds_table, "tables of F, L, F*, H and spine sizes")
    sp.add_argument("--pmax", type=int, default=20)
    sp.add_argument("--jmax", type=int, default=2)
    sp.add_argument("--imax", type=int, default=3)
    sp.add_argument("--dmax", type=int, default=5)
    sp.add_argument("--jobs", type=int, default=1)

    sp = add("color-cert", cmd_color_cert, "three-round colouring certificate for common neighbours")
    sp.add_argument("points", nargs="?", help="point file: two foci followed by the points")
    sp.add_argument("--triangle", type=int, nargs=3, metavar=("A", "B", "C"))
    sp.add_argument("--foci", default="AB")
    sp.add_argument("--count", type=int, default=50)
    sp.add_argument("--rmax", type=int, default=30000)

    sp = add("rational-circle", cmd_rational_circle, "points on the unit circle with rational chords")
    sp.add_argument("--n", type=int, required=True)

    sp = add("scale", cmd_scale, "scale a rational-distance set to an integral one")
    sp.add_argument("points")

    sp = add("verify", cmd_verify, "check a realization of a graph")
    sp.add_argument("--mode", choices=(INTEGRAL, RATIONAL), default=INTEGRAL)
    sp.add_argument("points")
    sp.add_argument("graph")

    sp = add("nonrational-cert", cmd_nonrational_cert, "conditional non-rationality transcript")
    sp.add_argument("--N", type=int, required=True)
    sp.add_argument("--graph-out", help="also write the two-clique graph here")

    sp = add("render-svg", cmd_render_svg, "draw a point set and/or a hyperbola family")
    sp.add_argument("points", nargs="?")
    sp.add_argument("--triangle", type=int, nargs=3, metavar=("A", "B", "C"))
    sp.add_argument("--dmax", type=int)
    return p


def run(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.func(args)
    except (InputError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
