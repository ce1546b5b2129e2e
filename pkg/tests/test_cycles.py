import random
from itertools import combinations

import pytest
from hypothesis import given, settings, strategies as st

import oracles
from bergecycle.constructions import gen_construction3, gen_construction4, gen_g1, gen_g2, gen_g3
from bergecycle.cycles import (berge_to_incidence, circumference, find_berge_cycle,
                               find_berge_cycle_with_edges, find_cycle_covering_exactly,
                               first_non_pancyclic_subset, has_hamiltonian_berge_cycle,
                               has_spanning_x_cycle, is_super_pancyclic, is_x_super_pancyclic,
                               iter_cycles_covering, longest_cycle, longest_cycles)
from bergecycle.model import BipartiteGraph, GraphError, Hypergraph, incidence_graph
from bergecycle.verify import enumerate_gnmd


def complete(n, m):
    return BipartiteGraph(n, m, ((1 << m) - 1,) * n)


def random_hypergraph(rng, n, m, min_size=1):
    return Hypergraph(n, tuple(frozenset(rng.sample(range(n), rng.randint(min_size, n))) for _ in range(m)))


def test_k33_spanning():
    w = find_cycle_covering_exactly(complete(3, 3), [0, 1, 2])
    assert sorted(w.xs) == [0, 1, 2] and sorted(w.ys) == [0, 1, 2]
    assert w.length == 6


def test_g1_has_no_spanning_cycle_but_every_pair_closes():
    g = gen_g1(3)
    assert find_cycle_covering_exactly(g, [0, 1, 2]) is None
    for pair in combinations(range(3), 2):
        w = find_cycle_covering_exactly(g, pair)
        assert set(w.ys) == {0, 1}  # the two hubs
        assert oracles.cycle_on_exactly(g, pair) is not None


def test_rejects_small_sets():
    with pytest.raises(GraphError):
        find_cycle_covering_exactly(complete(3, 3), [0])


@pytest.mark.parametrize("g, ell", [
    (gen_g1(4), 3),
    (gen_g2(2, 1, 3), 2),
    (gen_g3(1, 1, 1, 3), 2),
    (gen_g3(2, 1, 1, 3), 3),
    (gen_g3(1, 1, 1, 4), 2),
    (complete(4, 4), 4),
])
def test_longest_cycle(g, ell):
    w = longest_cycle(g)
    assert len(w) == ell and w.length == 2 * ell
    w.validate(g)
    assert oracles.circumference(g) == ell


def test_acyclic_graph():
    assert longest_cycle(gen_g1(2)) is None
    assert longest_cycle(gen_g2(1, 1, 2)) is None
    assert longest_cycles(gen_g1(2)) == []


@pytest.mark.parametrize("g, expected", [
    (complete(3, 3), True), (complete(4, 4), True),
    (gen_g1(3), False), (gen_g1(4), False), (gen_g3(1, 1, 1, 3), False),
])
def test_has_spanning_x_cycle(g, expected):
    assert has_spanning_x_cycle(g) is expected


def test_deterministic_witness():
    g = gen_g2(3, 1, 4)
    assert longest_cycle(g) == longest_cycle(g)
    assert [w.xs for w in iter_cycles_covering(g, [0, 1])] == [w.xs for w in iter_cycles_covering(g, [0, 1])]


def test_prune_is_correctness_neutral():
    rng = random.Random(5)
    for _ in range(200):
        n, m = rng.randint(2, 5), rng.randint(2, 6)
        g = BipartiteGraph.from_neighbourhoods(m, [[y for y in range(m) if rng.random() < 0.55] for _ in range(n)])
        for k in range(2, n + 1):
            for xs in combinations(range(n), k):
                with_prune = {(w.xs, w.ys) for w in iter_cycles_covering(g, xs)}
                without = {(w.xs, w.ys) for w in iter_cycles_covering(g, xs, prune=False)}
                assert with_prune == without


def test_agrees_with_brute_force_small_box():
    # the full n <= 4, m <= 6 sweep runs in the acceptance suite
    for n in range(2, 4):
        for m in range(0, 5):
            for g in enumerate_gnmd(n, m, 0):
                for k in range(2, n + 1):
                    for xs in combinations(range(n), k):
                        w = find_cycle_covering_exactly(g, xs)
                        assert (w is not None) == (oracles.cycle_on_exactly(g, xs) is not None)
                        if w is not None:
                            w.validate(g)
                            assert sorted(w.xs) == list(xs)


def test_dominating_y_never_destroys_spanning_cycle():
    rng = random.Random(17)
    for _ in range(300):
        n, m = rng.randint(2, 5), rng.randint(1, 7)
        g = BipartiteGraph.from_neighbourhoods(m, [[y for y in range(m) if rng.random() < 0.6] for _ in range(n)])
        if has_spanning_x_cycle(g):
            assert has_spanning_x_cycle(g.add_y((1 << n) - 1))


# -- Berge layer -------------------------------------------------------------

TRIANGLE = Hypergraph(3, ({0, 1}, {1, 2}, {0, 2}))


def test_triangle_berge_cycle():
    w = find_berge_cycle(TRIANGLE, [0, 1, 2])
    assert sorted(w.base) == [0, 1, 2] and sorted(w.edges) == [0, 1, 2]
    w.validate(TRIANGLE)


def test_berge_needs_three_vertices():
    with pytest.raises(GraphError):
        find_berge_cycle(TRIANGLE, [0, 1])
    with pytest.raises(GraphError):
        has_hamiltonian_berge_cycle(Hypergraph(2, ({0, 1},)))


def test_construction4_has_no_hamiltonian_berge_cycle():
    assert find_berge_cycle(gen_construction4(8), range(8)) is None


def test_construction3_v1_cycle_uses_only_v1_edges():
    h = gen_construction3(5)
    v1 = {0, 1, 2}
    w = find_berge_cycle(h, v1)
    assert w is not None and set(w.base) == v1
    assert all(h.edges[e] <= v1 for e in w.edges)
    # oracle on the sub-hypergraph induced by V1
    sub = Hypergraph(5, tuple(e for e in h.edges if e <= v1))
    assert oracles.berge_cycle_on(sub, v1) is not None


@pytest.mark.parametrize("h, expected", [
    (Hypergraph(4, tuple(set(p) for p in combinations(range(4), 2))), True),
    (gen_construction3(5), False),
    (gen_construction4(8), False),
])
def test_hamiltonian_berge(h, expected):
    assert has_hamiltonian_berge_cycle(h) is expected


def test_berge_with_edges():
    w = find_berge_cycle_with_edges(TRIANGLE, [0, 1, 2])
    assert sorted(w.base) == [0, 1, 2]
    w.validate(TRIANGLE)
    h = Hypergraph(2, ({0, 1}, {0, 1}, {0, 1}))
    assert find_berge_cycle_with_edges(h, [0, 1, 2]) is None
    with pytest.raises(GraphError):
        find_berge_cycle_with_edges(h, [0, 1])


def test_berge_with_edges_matches_brute_force():
    rng = random.Random(99)
    for _ in range(60):
        h = random_hypergraph(rng, 5, 4, min_size=3)
        for b in combinations(range(4), 3):
            got = find_berge_cycle_with_edges(h, b)
            assert (got is not None) == (oracles.berge_cycle_with_edges(h, b) is not None)
            if got is not None:
                got.validate(h)
                assert set(got.edges) == set(b)
        got = find_berge_cycle_with_edges(h, range(4))
        assert (got is not None) == (oracles.berge_cycle_with_edges(h, range(4)) is not None)


@settings(max_examples=150, deadline=None)
@given(st.integers(0, 10**6))
def test_incidence_correspondence(seed):
    rng = random.Random(seed)
    h = random_hypergraph(rng, rng.randint(3, 5), rng.randint(2, 6))
    g = incidence_graph(h)
    for k in range(3, h.n + 1):
        for a in combinations(range(h.n), k):
            b = find_berge_cycle(h, a)
            c = find_cycle_covering_exactly(g, a)
            assert (b is None) == (c is None)
            assert (b is None) == (oracles.berge_cycle_on(h, a) is None)
            if b is not None:
                cyc = berge_to_incidence(b)
                cyc.validate(g)
                assert cyc.length == 2 * len(b)


def test_pancyclicity():
    assert is_x_super_pancyclic(complete(4, 4))
    assert first_non_pancyclic_subset(gen_g1(3)) == (0, 1, 2)
    assert not is_x_super_pancyclic(gen_g1(3))
    assert is_super_pancyclic(Hypergraph(4, tuple(set(p) for p in combinations(range(4), 2))))
    with pytest.raises(GraphError):
        is_x_super_pancyclic(complete(2, 3))


def test_circumference_matches_longest_cycles():
    for g in enumerate_gnmd(3, 5, 3):
        cs = longest_cycles(g)
        assert all(len(c) == circumference(g) for c in cs)
        assert len({(c.xs, c.ys) for c in cs}) == len(cs)
