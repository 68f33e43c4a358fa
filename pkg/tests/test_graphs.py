import pytest
from hypothesis import given, settings
import hypothesis.strategies as st

from intgraphs.chart import PointSet
from intgraphs.graphs import (
    INTEGRAL,
    RATIONAL,
    BudgetExceeded,
    DistanceGraph,
    build_apex_graph,
    build_family3_graph,
    build_spine_graph,
    chromatic_lower_bound,
    chromatic_number_exact,
    complete_graph,
    cycle_graph,
    disjoint_union,
    format_graph,
    mycielskian,
    parse_graph,
    verify_realization,
)

RECT = PointSet.of(1, [(0, 0), (3, 0), (3, 4), (0, 4)])


@pytest.mark.parametrize(
    "g, chi",
    [
        (complete_graph(4), 4),
        (cycle_graph(5), 3),
        (cycle_graph(6), 2),
        (mycielskian(cycle_graph(5)), 4),
        (mycielskian(mycielskian(cycle_graph(5))), 5),
        (DistanceGraph(3), 1),
        (DistanceGraph(0), 0),
    ],
)
def test_chromatic_numbers(g, chi):
    assert chromatic_number_exact(g) == chi


def _brute_chromatic(g):
    import itertools

    n = g.vertex_count
    for k in range(1, n + 1):
        for col in itertools.product(range(k), repeat=n):
            if all(col[u] != col[v] for u, v in g.edges):
                return k
    return 0


@st.composite
def small_graphs(draw):
    n = draw(st.integers(1, 7))
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    return DistanceGraph(n, frozenset(draw(st.lists(st.sampled_from(pairs), unique=True)) if pairs else []))


@settings(max_examples=60)
@given(small_graphs())
def test_exact_matches_brute_force(g):
    chi = chromatic_number_exact(g)
    assert chi == _brute_chromatic(g)
    assert chromatic_lower_bound(g) <= chi


def test_exact_refuses_large_graphs():
    with pytest.raises(BudgetExceeded):
        chromatic_number_exact(DistanceGraph(61))


def test_graph_validation():
    with pytest.raises(ValueError):
        DistanceGraph(2, frozenset({(0, 0)}))
    with pytest.raises(ValueError):
        DistanceGraph(2, frozenset({(0, 2)}))
    assert DistanceGraph(2, frozenset({(1, 0)})).edges == {(0, 1)}


def test_realization_rectangle():
    assert verify_realization(complete_graph(4).with_realization(RECT), INTEGRAL).passed
    assert verify_realization(complete_graph(4).with_realization(RECT), RATIONAL).passed


def test_realization_unit_square_fails():
    sq = PointSet.of(1, [(0, 0), (1, 0), (1, 1), (0, 1)])
    rep = verify_realization(complete_graph(4).with_realization(sq), INTEGRAL)
    assert not rep.passed and sorted(rep.bad_edges) == [(0, 2), (1, 3)]
    assert "verdict=fail" in rep.to_text()


def test_realization_non_edge_at_integer_distance():
    path = PointSet.of(1, [(0, 0), (3, 0), (3, 4)])
    g = DistanceGraph.from_edges(3, [(0, 1), (1, 2)]).with_realization(path)
    rep = verify_realization(g)
    assert rep.bad_non_edges == [(0, 2)] and not rep.passed


def test_realization_collinear_rejected():
    line = PointSet.of(1, [(0, 0), (1, 0), (2, 0)])
    rep = verify_realization(complete_graph(3).with_realization(line))
    assert rep.collinear_triples == [(0, 1, 2)]


def test_realization_with_mapping():
    g = complete_graph(3).with_realization(RECT, [3, 0, 1])
    assert verify_realization(g).passed
    with pytest.raises(ValueError):
        complete_graph(3).with_realization(RECT, [0, 0, 1])
    with pytest.raises(ValueError):
        verify_realization(complete_graph(3))


def test_apex_graph():
    g = build_apex_graph(complete_graph(3))
    assert (g.vertex_count, len(g.edges)) == (5, 9)
    g = build_apex_graph(DistanceGraph(4))
    assert (g.vertex_count, len(g.edges)) == (6, 8)
    assert g.degree(4) == g.degree(5) == 4
    assert len(build_apex_graph(DistanceGraph(4), apexes_adjacent=True).edges) == 9


def test_spine_graph():
    g = build_spine_graph(2, [1, 1])
    assert (g.vertex_count, len(g.edges)) == (8, 21)
    assert all(g.degree(v) == 3 for v in (6, 7))
    assert build_spine_graph(1, [0]).edges == complete_graph(3).edges
    assert chromatic_number_exact(g) == 6
    assert chromatic_number_exact(build_spine_graph(3, [1, 2, 1])) == 6
    with pytest.raises(ValueError):
        build_spine_graph(2, [1])


def test_family3_graph():
    g = build_family3_graph(1, [DistanceGraph(1)])
    assert (g.vertex_count, len(g.edges)) == (4, 6)
    g = build_family3_graph(1, [cycle_graph(5)])
    assert (g.vertex_count, len(g.edges)) == (8, 23)
    assert chromatic_number_exact(g) == 6


def test_disjoint_union():
    g = disjoint_union([complete_graph(3), cycle_graph(4)])
    assert g.vertex_count == 7 and len(g.edges) == 7
    assert chromatic_number_exact(g) == 3


@settings(max_examples=30)
@given(small_graphs())
def test_graph_text_round_trip(g):
    parsed, mapping = parse_graph(format_graph(g))
    assert parsed.edges == g.edges and parsed.vertex_count == g.vertex_count and mapping is None


def test_graph_text_with_map():
    g, mapping = parse_graph("graph 3\ne 0 1\ne 1 2  # path\nmap 2 0 1\n")
    assert mapping == (2, 0, 1) and g.has_edge(1, 0)
    with pytest.raises(ValueError):
        parse_graph("e 0 1\n")
    with pytest.raises(ValueError):
        parse_graph("graph 2\nedge 0 1\n")
