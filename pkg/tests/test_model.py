import pytest
from hypothesis import given, settings, strategies as st

from bergecycle.constructions import gen_construction3, gen_construction4
from bergecycle.model import (BergeCycleWitness, BipartiteGraph, CycleWitness, GraphError,
                              Hypergraph, dual_incidence_graph, hypergraph_of, incidence_graph)

TRIANGLE = Hypergraph(3, ({0, 1}, {1, 2}, {0, 2}))


@st.composite
def hypergraphs(draw, max_n=6, max_m=7):
    n = draw(st.integers(1, max_n))
    edges = draw(st.lists(st.sets(st.integers(0, n - 1), min_size=1), min_size=1, max_size=max_m))
    return Hypergraph(n, tuple(edges))


def test_triangle_incidence_is_six_cycle():
    g = incidence_graph(TRIANGLE)
    assert (g.n, g.m) == (3, 3)
    assert g.x_degrees() == [2, 2, 2]
    assert g.y_degrees() == [2, 2, 2]
    assert g.edge_count == 6


def test_single_edge_gives_star():
    h = Hypergraph(4, (set(range(4)),))
    g = incidence_graph(h)
    assert g.m == 1
    assert g.y_degrees() == [4]


def test_construction3_incidence_counts():
    g = incidence_graph(gen_construction3(5))
    assert g.m == 8
    # shared vertex v = 2 lies in (2^2 - 1) edges on each side
    assert g.x_degrees()[2] == 6


def test_dual_is_transpose():
    assert dual_incidence_graph(TRIANGLE) == incidence_graph(TRIANGLE).transpose()
    d = dual_incidence_graph(Hypergraph(3, ({0, 1, 2},)))
    assert d.n == 1 and d.x_degrees() == [3]


@settings(max_examples=1000, deadline=None)
@given(hypergraphs())
def test_incidence_and_dual_are_transposes(h):
    g, d = incidence_graph(h), dual_incidence_graph(h)
    assert g.transpose() == d
    assert d.transpose() == g
    assert d.x_degrees() == g.y_degrees()
    assert d.y_degrees() == g.x_degrees()


@settings(max_examples=300, deadline=None)
@given(hypergraphs())
def test_min_degree_matches_incidence(h):
    assert h.min_degree == incidence_graph(h).min_x_degree
    assert hypergraph_of(incidence_graph(h)) == h


def test_codegree():
    h = gen_construction3(5)
    assert h.min_degree == 3
    assert h.codegree([0, 3]) == 0  # 0 only in V1 - v, 3 only in V2 - v
    assert h.codegree([0, 1]) == 2
    with pytest.raises(GraphError):
        h.codegree([])


def test_construction4_min_degree_on_v1():
    h = gen_construction4(8)
    degs = h.degrees()
    assert min(degs) == 4
    assert [v for v, d in enumerate(degs) if d == 4] == [0, 1, 2, 3, 4]


def test_class_membership():
    g = BipartiteGraph.from_neighbourhoods(3, [[0, 1, 2], [0, 1]])
    assert g.in_class(2) and not g.in_class(3)
    assert not BipartiteGraph.from_neighbourhoods(3, [[0, 1, 2]]).in_class(1)


@pytest.mark.parametrize("rows, m", [([[0, 3]], 3), ([[0, 0]], 2)])
def test_bad_neighbourhoods(rows, m):
    with pytest.raises(GraphError):
        BipartiteGraph.from_neighbourhoods(m, rows)


def test_empty_edge_rejected_but_singleton_allowed():
    with pytest.raises(GraphError):
        Hypergraph(2, ({0}, set()))
    assert Hypergraph(2, ({0}, {0})).m == 2


def test_cycle_witness_validation():
    k22 = BipartiteGraph.from_neighbourhoods(2, [[0, 1], [0, 1]])
    CycleWitness((0, 1), (0, 1), graph=k22)
    path = BipartiteGraph.from_neighbourhoods(2, [[0, 1], [0]])
    with pytest.raises(GraphError):
        CycleWitness((0, 1), (0, 1), graph=path)
    with pytest.raises(GraphError):
        CycleWitness((0, 0), (0, 1))
    with pytest.raises(GraphError):
        CycleWitness((0,), (0,))


def test_berge_witness_validation():
    BergeCycleWitness((0, 1, 2), (0, 1, 2), hypergraph=TRIANGLE)
    with pytest.raises(GraphError):
        BergeCycleWitness((0, 2, 1), (0, 1, 2), hypergraph=TRIANGLE)
    with pytest.raises(GraphError):
        BergeCycleWitness((0, 1, 2), (0, 0, 2))


def test_relabel_and_add_y():
    g = BipartiteGraph.from_neighbourhoods(4, [[0, 1], [1, 2], [2, 3]])
    px, py = [2, 0, 1], [3, 1, 0, 2]
    r = g.relabel(px, py)
    for x in range(3):
        for y in range(4):
            assert g.has_edge(x, y) == r.has_edge(px[x], py[y])
    h = g.add_y(0b101)
    assert h.m == 5 and h.columns[-1] == 0b101
