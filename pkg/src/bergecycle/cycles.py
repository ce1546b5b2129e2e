"""Exact cycle search in bipartite graphs and Berge cycles in hypergraphs.

The core routine looks for a cycle whose X-vertices are exactly a given set.
It grows a path from a fixed start vertex, choosing the next X-vertex and a
fresh connector Y-vertex at each step, and closes the path through an unused
common neighbour of the last vertex and the start.  Two prunes are applied at
every node: a Hall-type matching test (every X-vertex still waiting for its
outgoing connector must get a distinct unused neighbour) and a memo of
(current vertex, remaining set, used connectors) states already proven dead.
Neither prune changes the set of cycles found.
"""

from __future__ import annotations

from itertools import combinations
from typing import Iterable, Iterator

from .model import (BergeCycleWitness, BipartiteGraph, CycleWitness, GraphError,
                    Hypergraph, bits, dual_incidence_graph, incidence_graph, popcount,
                    to_mask)


def _as_mask(xset) -> int:
    return xset if isinstance(xset, int) else to_mask(xset)


def _matchable(adj: tuple[int, ...], left: list[int], free: int) -> bool:
    """Can every vertex in ``left`` be matched to a distinct Y-vertex in ``free``?"""
    owner: dict[int, int] = {}

    def augment(x: int, seen: int) -> tuple[bool, int]:
        for y in bits(adj[x] & free & ~seen):
            seen |= 1 << y
            if y not in owner:
                owner[y] = x
                return True, seen
            ok, seen = augment(owner[y], seen)
            if ok:
                owner[y] = x
                return True, seen
        return False, seen

    for x in left:
        ok, _ = augment(x, 0)
        if not ok:
            return False
    return True


def _search_order(g: BipartiteGraph, xmask: int) -> list[int]:
    return sorted(bits(xmask), key=lambda x: (popcount(g.adj[x]), x))


def iter_cycles_covering(g: BipartiteGraph, xset, *, prune: bool = True) -> Iterator[CycleWitness]:
    """Yield every cycle whose X-vertices are exactly ``xset``.

    Each cycle is produced once per orientation.  The order is deterministic:
    X-vertices are tried by ascending degree, connectors by ascending index.
    """
    xmask = _as_mask(xset)
    k = popcount(xmask)
    if k < 2:
        raise GraphError(f"need at least two X-vertices, got {k}")
    if xmask >> g.n:
        raise GraphError("X-set leaves range")
    adj = g.adj
    order = _search_order(g, xmask)
    start = order[0]
    path = [start]
    conns: list[int] = []
    dead: set[tuple[int, int, int]] = set()

    def viable(cur: int, remaining: int, used: int) -> bool:
        free = ~used
        for x in bits(remaining):
            if popcount(adj[x] & free) < 2:
                return False
        if not adj[start] & free:
            return False
        return _matchable(adj, [cur, *bits(remaining)], free & ((1 << g.m) - 1))

    def grow(cur: int, remaining: int, used: int) -> Iterator[CycleWitness]:
        if not remaining:
            for y in bits(adj[cur] & adj[start] & ~used):
                yield CycleWitness(tuple(path), (y, *conns))
            return
        key = (cur, remaining, used)
        if prune and (key in dead or not viable(cur, remaining, used)):
            dead.add(key)
            return
        found = False
        for nxt in order:
            bit = 1 << nxt
            if not remaining & bit:
                continue
            for y in bits(adj[cur] & adj[nxt] & ~used):
                path.append(nxt)
                conns.append(y)
                for w in grow(nxt, remaining ^ bit, used | 1 << y):
                    found = True
                    yield w
                path.pop()
                conns.pop()
        if not found:
            dead.add(key)

    yield from grow(start, xmask & ~(1 << start), 0)


def find_cycle_covering_exactly(g: BipartiteGraph, xset) -> CycleWitness | None:
    """A cycle C with V(C) ∩ X equal to ``xset``, or None if there is none."""
    w = next(iter_cycles_covering(g, xset), None)
    if w is not None:
        w.validate(g)
    return w


def has_spanning_x_cycle(g: BipartiteGraph) -> bool:
    """Does ``g`` contain a cycle of length 2n (one through every X-vertex)?"""
    if g.n < 2:
        return False
    return find_cycle_covering_exactly(g, (1 << g.n) - 1) is not None


def longest_cycle(g: BipartiteGraph) -> CycleWitness | None:
    """A cycle with the maximum number of X-vertices, or None if ``g`` has none.

    Sizes are tried from the largest down; within a size, X-subsets in
    lexicographic order, and the first cycle found wins.
    """
    for ell in range(min(g.n, g.m), 1, -1):
        for xs in combinations(range(g.n), ell):
            w = find_cycle_covering_exactly(g, xs)
            if w is not None:
                return w
    return None


def circumference(g: BipartiteGraph) -> int:
    """Number of X-vertices on a longest cycle (0 if acyclic)."""
    w = longest_cycle(g)
    return 0 if w is None else len(w)


def normalise(w: CycleWitness) -> CycleWitness:
    """Pick a fixed rotation and orientation for a cycle."""
    ell = len(w)
    xs, ys = w.xs, w.ys
    i = xs.index(min(xs))
    fwd = (xs[i:] + xs[:i], ys[i:] + ys[:i])
    # reversed traversal starting at the same X-vertex
    rx = tuple(xs[(i - k) % ell] for k in range(ell))
    ry = tuple(ys[(i + 1 - k) % ell] for k in range(ell))
    return CycleWitness(*min(fwd, (rx, ry)))


def longest_cycles(g: BipartiteGraph) -> list[CycleWitness]:
    """All longest cycles of ``g``, one entry per cycle (rotation/orientation fixed)."""
    for ell in range(min(g.n, g.m), 1, -1):
        found = set()
        for xs in combinations(range(g.n), ell):
            for w in iter_cycles_covering(g, xs):
                found.add(normalise(w))
        if found:
            return sorted(found, key=lambda w: (w.xs, w.ys))
    return []


# Berge layer: base vertices are the X side of the incidence graph.

def _berge_from_incidence(w: CycleWitness, h: Hypergraph) -> BergeCycleWitness:
    # y_{i+1} sits between x_i and x_{i+1} and plays the role of e_i
    edges = w.ys[1:] + w.ys[:1]
    return BergeCycleWitness(w.xs, edges, hypergraph=h)


def berge_to_incidence(b: BergeCycleWitness) -> CycleWitness:
    return CycleWitness(b.base, b.edges[-1:] + b.edges[:-1])


def find_berge_cycle(h: Hypergraph, base: Iterable[int]) -> BergeCycleWitness | None:
    """A Berge cycle whose set of base vertices is exactly ``base``."""
    a = sorted(set(base))
    if len(a) < 3:
        raise GraphError(f"Berge cycle queries need at least 3 base vertices, got {len(a)}")
    if a[0] < 0 or a[-1] >= h.n:
        raise GraphError("base vertex out of range")
    w = find_cycle_covering_exactly(incidence_graph(h), a)
    return None if w is None else _berge_from_incidence(w, h)


def has_hamiltonian_berge_cycle(h: Hypergraph) -> bool:
    if h.n < 3:
        raise GraphError("a Hamiltonian Berge cycle needs n >= 3")
    return find_berge_cycle(h, range(h.n)) is not None


def find_berge_cycle_with_edges(h: Hypergraph, edge_set: Iterable[int]) -> BergeCycleWitness | None:
    """A Berge cycle whose edges are exactly ``edge_set`` (base vertices free)."""
    b = sorted(set(edge_set))
    if len(b) < 3:
        raise GraphError(f"need at least 3 edges, got {len(b)}")
    if b[0] < 0 or b[-1] >= h.m:
        raise GraphError("edge index out of range")
    w = find_cycle_covering_exactly(dual_incidence_graph(h), b)
    # in the dual graph ys[i] lies in edges xs[i-1] and xs[i]
    return None if w is None else BergeCycleWitness(w.ys, w.xs, hypergraph=h)


def first_non_pancyclic_subset(g: BipartiteGraph) -> tuple[int, ...] | None:
    """First X' (by size, then lexicographically) with |X'| >= 3 and no cycle on exactly X'."""
    if g.n < 3:
        raise GraphError("X-super-pancyclicity needs |X| >= 3")
    for k in range(3, g.n + 1):
        for xs in combinations(range(g.n), k):
            if find_cycle_covering_exactly(g, xs) is None:
                return xs
    return None


def is_x_super_pancyclic(g: BipartiteGraph) -> bool:
    return first_non_pancyclic_subset(g) is None


def first_non_pancyclic_base(h: Hypergraph) -> tuple[int, ...] | None:
    if h.n < 3:
        raise GraphError("super-pancyclicity needs n >= 3")
    return first_non_pancyclic_subset(incidence_graph(h))


def is_super_pancyclic(h: Hypergraph) -> bool:
    return first_non_pancyclic_base(h) is None
