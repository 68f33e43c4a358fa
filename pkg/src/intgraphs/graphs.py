"""Finite graphs, chromatic numbers, realization checks and the three graph families."""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import Iterable, Optional, Sequence

from .chart import PointSet, collinear, integer_distance, rational_distance

INTEGRAL = "integral"
RATIONAL = "rational"

EXACT_VERTEX_LIMIT = 60


class BudgetExceeded(RuntimeError):
    pass


@dataclass(frozen=True)
class DistanceGraph:
    vertex_count: int
    edges: frozenset = frozenset()
    realization: Optional[PointSet] = None
    mapping: Optional[tuple[int, ...]] = None  # vertex -> point index

    def __post_init__(self):
        norm = set()
        for u, v in self.edges:
            if u == v:
                raise ValueError(f"self-loop at {u}")
            if not (0 <= u < self.vertex_count and 0 <= v < self.vertex_count):
                raise ValueError(f"edge {(u, v)} out of range")
            norm.add((min(u, v), max(u, v)))
        object.__setattr__(self, "edges", frozenset(norm))
        if self.mapping is not None:
            object.__setattr__(self, "mapping", tuple(self.mapping))

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> "DistanceGraph":
        return cls(n, frozenset(edges))

    def with_realization(self, ps: PointSet, mapping: Optional[Sequence[int]] = None) -> "DistanceGraph":
        if mapping is None:
            mapping = range(self.vertex_count)
        mapping = tuple(mapping)
        if len(mapping) != self.vertex_count:
            raise ValueError("mapping must cover every vertex")
        if any(not 0 <= i < len(ps) for i in mapping) or len(set(mapping)) != len(mapping):
            raise ValueError("mapping must be injective into the point set")
        return DistanceGraph(self.vertex_count, self.edges, ps, mapping)

    def adjacency(self) -> list[set[int]]:
        adj = [set() for _ in range(self.vertex_count)]
        for u, v in self.edges:
            adj[u].add(v)
            adj[v].add(u)
        return adj

    def degree(self, v: int) -> int:
        return sum(1 for e in self.edges if v in e)

    def has_edge(self, u: int, v: int) -> bool:
        return (min(u, v), max(u, v)) in self.edges


def complete_graph(n: int) -> DistanceGraph:
    return DistanceGraph(n, frozenset(itertools.combinations(range(n), 2)))


def cycle_graph(n: int) -> DistanceGraph:
    return DistanceGraph(n, frozenset((i, (i + 1) % n) for i in range(n)))


def mycielskian(g: DistanceGraph) -> DistanceGraph:
    n = g.vertex_count
    edges = set(g.edges)
    for u, v in g.edges:
        edges.add((u, n + v))
        edges.add((v, n + u))
    for v in range(n):
        edges.add((n + v, 2 * n))
    return DistanceGraph(2 * n + 1, frozenset(edges))


def disjoint_union(graphs: Sequence[DistanceGraph]) -> DistanceGraph:
    edges = set()
    offset = 0
    for g in graphs:
        edges.update((u + offset, v + offset) for u, v in g.edges)
        offset += g.vertex_count
    return DistanceGraph(offset, frozenset(edges))


# -- chromatic number -------------------------------------------------------------


def greedy_clique(g: DistanceGraph) -> list[int]:
    adj = g.adjacency()
    best: list[int] = []
    for start in sorted(range(g.vertex_count), key=lambda v: -len(adj[v])):
        clique = [start]
        cand = set(adj[start])
        while cand:
            v = max(cand, key=lambda x: (len(adj[x] & cand), -x))
            clique.append(v)
            cand &= adj[v]
        if len(clique) > len(best):
            best = clique
    return sorted(best)


def degeneracy(g: DistanceGraph) -> int:
    adj = [set(s) for s in g.adjacency()]
    alive = set(range(g.vertex_count))
    deg = 0
    while alive:
        v = min(alive, key=lambda x: (len(adj[x]), x))
        deg = max(deg, len(adj[v]))
        for u in adj[v]:
            adj[u].discard(v)
        alive.remove(v)
    return deg


def chromatic_lower_bound(g: DistanceGraph) -> int:
    """Size of a greedily found clique (checked against the degeneracy upper bound)."""
    if g.vertex_count == 0:
        return 0
    lb = len(greedy_clique(g))
    assert lb <= degeneracy(g) + 1
    return lb


def chromatic_number_exact(g: DistanceGraph, node_budget: int = 5_000_000) -> int:
    """DSATUR branch and bound seeded with a greedy clique."""
    n = g.vertex_count
    if n > EXACT_VERTEX_LIMIT:
        raise BudgetExceeded(f"{n} vertices exceeds exact limit {EXACT_VERTEX_LIMIT}; use chromatic_lower_bound")
    if n == 0:
        return 0
    adj = g.adjacency()
    clique = greedy_clique(g)
    lb = len(clique)
    best = degeneracy(g) + 1
    colors = [-1] * n
    for i, v in enumerate(clique):
        colors[v] = i
    nodes = 0

    def pick():
        best_v, best_key = -1, None
        for v in range(n):
            if colors[v] >= 0:
                continue
            sat = len({colors[u] for u in adj[v] if colors[u] >= 0})
            key = (sat, len(adj[v]), -v)
            if best_key is None or key > best_key:
                best_v, best_key = v, key
        return best_v

    def rec(used: int, colored: int):
        nonlocal best, nodes
        nodes += 1
        if nodes > node_budget:
            raise BudgetExceeded("chromatic search exceeded node budget")
        if used >= best:
            return
        if colored == n:
            best = used
            return
        v = pick()
        forbidden = {colors[u] for u in adj[v] if colors[u] >= 0}
        for c in range(min(used + 1, best - 1)):
            if c in forbidden:
                continue
            colors[v] = c
            rec(max(used, c + 1), colored + 1)
            colors[v] = -1
            if best == lb:
                return

    rec(lb, len(clique))
    return best


# -- realization check ----------------------------------------------------------------


@dataclass
class RealizationReport:
    mode: str
    bad_edges: list[tuple[int, int]] = field(default_factory=list)
    bad_non_edges: list[tuple[int, int]] = field(default_factory=list)
    collinear_triples: list[tuple[int, int, int]] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not (self.bad_edges or self.bad_non_edges or self.collinear_triples)

    def to_text(self) -> str:
        lines = [f"mode={self.mode}"]
        lines += [f"edge {u} {v} not {self.mode}" for u, v in self.bad_edges]
        lines += [f"non-edge {u} {v} is {self.mode}" for u, v in self.bad_non_edges]
        lines += [f"collinear {a} {b} {c}" for a, b, c in self.collinear_triples]
        lines.append(f"verdict={'pass' if self.passed else 'fail'}")
        return "\n".join(lines) + "\n"


def verify_realization(g: DistanceGraph, mode: str = INTEGRAL) -> RealizationReport:
    """Edges exactly at integer (rational) distance, and no three points collinear."""
    if g.realization is None:
        raise ValueError("graph has no realization attached")
    if mode not in (INTEGRAL, RATIONAL):
        raise ValueError(f"unknown mode {mode!r}")
    test = integer_distance if mode == INTEGRAL else rational_distance
    pts = [g.realization[g.mapping[v]] for v in range(g.vertex_count)]
    report = RealizationReport(mode)
    for u, v in itertools.combinations(range(g.vertex_count), 2):
        good = test(pts[u], pts[v]) is not None
        if g.has_edge(u, v) and not good:
            report.bad_edges.append((u, v))
        elif not g.has_edge(u, v) and good:
            report.bad_non_edges.append((u, v))
    for a, b, c in itertools.combinations(range(g.vertex_count), 3):
        if collinear(pts[a], pts[b], pts[c]):
            report.collinear_triples.append((a, b, c))
    return report


# -- constructions ------------------------------------------------------------------


def build_apex_graph(core: DistanceGraph, apexes_adjacent: bool = False) -> DistanceGraph:
    """Core plus two vertices joined to every core vertex."""
    n = core.vertex_count
    v, w = n, n + 1
    edges = set(core.edges)
    for x in range(n):
        edges.add((x, v))
        edges.add((x, w))
    if apexes_adjacent:
        edges.add((v, w))
    return DistanceGraph(n + 2, frozenset(edges))


def _spine_edges(depth: int) -> set[tuple[int, int]]:
    edges = set()
    for i in range(depth):
        tri = range(3 * i, 3 * i + 3)
        edges.update(itertools.combinations(tri, 2))
        if i + 1 < depth:
            edges.update((a, b) for a in tri for b in range(3 * i + 3, 3 * i + 6))
    return edges


def build_spine_graph(depth: int, pendant_counts: Sequence[int]) -> DistanceGraph:
    """Chain of triangles (consecutive pairs span K6) with pendant vertices.

    Triangle ``i`` occupies vertices ``3i..3i+2``; pendants follow in order.
    """
    if depth < 1:
        raise ValueError("depth must be at least 1")
    if len(pendant_counts) != depth:
        raise ValueError("need one pendant count per triangle")
    if any(n < 0 for n in pendant_counts):
        raise ValueError("pendant counts must be non-negative")
    edges = _spine_edges(depth)
    nxt = 3 * depth
    for i, count in enumerate(pendant_counts):
        for _ in range(count):
            edges.update((a, nxt) for a in range(3 * i, 3 * i + 3))
            nxt += 1
    return DistanceGraph(nxt, frozenset(edges))


def build_family3_graph(depth: int, cores: Sequence[DistanceGraph]) -> DistanceGraph:
    """Spine whose triangle ``i`` is joined to every vertex of ``cores[i]``."""
    if depth < 1:
        raise ValueError("depth must be at least 1")
    if len(cores) != depth:
        raise ValueError("need one core per triangle")
    edges = _spine_edges(depth)
    nxt = 3 * depth
    for i, core in enumerate(cores):
        edges.update((u + nxt, v + nxt) for u, v in core.edges)
        for x in range(core.vertex_count):
            edges.update((a, nxt + x) for a in range(3 * i, 3 * i + 3))
        nxt += core.vertex_count
    return DistanceGraph(nxt, frozenset(edges))


# -- text format ---------------------------------------------------------------------


def format_graph(g: DistanceGraph) -> str:
    lines = [f"graph {g.vertex_count}"]
    lines += [f"e {u} {v}" for u, v in sorted(g.edges)]
    if g.mapping is not None and g.mapping != tuple(range(g.vertex_count)):
        lines.append("map " + " ".join(map(str, g.mapping)))
    return "\n".join(lines) + "\n"


def parse_graph(text: str) -> tuple[DistanceGraph, Optional[tuple[int, ...]]]:
    """Parse the ``graph``/``e``/``map`` format; returns the graph and the map if present."""
    n = None
    edges = []
    mapping = None
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        try:
            if parts[0] == "graph" and len(parts) == 2:
                n = int(parts[1])
            elif parts[0] == "e" and len(parts) == 3:
                edges.append((int(parts[1]), int(parts[2])))
            elif parts[0] == "map":
                mapping = tuple(int(x) for x in parts[1:])
            else:
                raise ValueError
        except ValueError:
            raise ValueError(f"line {lineno}: cannot parse {raw!r}") from None
    if n is None:
        raise ValueError("missing 'graph <V>' header")
    return DistanceGraph(n, frozenset(edges), mapping=mapping), mapping
