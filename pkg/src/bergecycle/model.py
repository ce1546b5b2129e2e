"""Bipartite graphs, multihypergraphs and the incidence correspondence.

Neighbourhoods are stored as Python ints used as bit vectors: bit ``y`` of
``adj[x]`` is set iff ``x ~ y``.  Python ints are arbitrary width, so the
same code path serves graphs with more than 64 Y-vertices.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, Iterator, Sequence


class GraphError(ValueError):
    """Raised when a structure violates its invariants."""


def bits(mask: int) -> Iterator[int]:
    """Yield the indices of the set bits of ``mask`` in ascending order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def to_mask(indices: Iterable[int]) -> int:
    mask = 0
    for i in indices:
        mask |= 1 << i
    return mask


def popcount(mask: int) -> int:
    return bin(mask).count("1")


@dataclass(frozen=True)
class BipartiteGraph:
    """Bipartite graph with parts X = {0..n-1} and Y = {0..m-1}.

    ``adj[x]`` is the neighbourhood of X-vertex ``x`` as a bit vector over Y.
    """

    n: int
    m: int
    adj: tuple[int, ...]

    def __post_init__(self):
        if self.n < 1:
            raise GraphError(f"need at least one X-vertex, got n={self.n}")
        if self.m < 0:
            raise GraphError(f"negative Y size m={self.m}")
        adj = tuple(int(a) for a in self.adj)
        object.__setattr__(self, "adj", adj)
        if len(adj) != self.n:
            raise GraphError(f"expected {self.n} neighbourhoods, got {len(adj)}")
        limit = 1 << self.m
        for x, row in enumerate(adj):
            if row < 0 or row >= limit:
                raise GraphError(f"neighbourhood of x={x} leaves Y range 0..{self.m - 1}")

    @classmethod
    def from_neighbourhoods(cls, m: int, rows: Sequence[Iterable[int]]) -> "BipartiteGraph":
        adj = []
        for x, row in enumerate(rows):
            row = list(row)
            if len(set(row)) != len(row):
                raise GraphError(f"repeated Y-vertex in neighbourhood of x={x}")
            adj.append(to_mask(row))
        return cls(len(adj), m, tuple(adj))

    @classmethod
    def from_columns(cls, n: int, columns: Sequence[int]) -> "BipartiteGraph":
        """Build from Y-neighbourhoods given as bit vectors over X."""
        adj = [0] * n
        for y, col in enumerate(columns):
            for x in bits(col):
                adj[x] |= 1 << y
        return cls(n, len(columns), tuple(adj))

    @cached_property
    def columns(self) -> tuple[int, ...]:
        """Neighbourhoods of the Y-vertices as bit vectors over X."""
        cols = [0] * self.m
        for x, row in enumerate(self.adj):
            for y in bits(row):
                cols[y] |= 1 << x
        return tuple(cols)

    def neighbours(self, x: int) -> list[int]:
        return list(bits(self.adj[x]))

    def has_edge(self, x: int, y: int) -> bool:
        return bool(self.adj[x] >> y & 1)

    def x_degrees(self) -> list[int]:
        return [popcount(a) for a in self.adj]

    def y_degrees(self) -> list[int]:
        return [popcount(c) for c in self.columns]

    @property
    def min_x_degree(self) -> int:
        return min(self.x_degrees())

    @property
    def edge_count(self) -> int:
        return sum(self.x_degrees())

    def in_class(self, delta: int) -> bool:
        """Membership in G(n, m, delta): n >= 2 and every X-degree >= delta."""
        return self.n >= 2 and self.min_x_degree >= delta

    def transpose(self) -> "BipartiteGraph":
        """Swap the roles of X and Y."""
        if self.m < 1:
            raise GraphError("cannot transpose a graph with empty Y")
        return BipartiteGraph(self.m, self.n, self.columns)

    def induced(self, xs: Iterable[int], y_mask: int) -> "BipartiteGraph":
        """Subgraph induced on the X-vertices ``xs`` and Y-vertices in ``y_mask``.

        Y-vertices are relabelled in ascending order.
        """
        ys = list(bits(y_mask))
        pos = {y: i for i, y in enumerate(ys)}
        rows = [[pos[y] for y in bits(self.adj[x] & y_mask)] for x in xs]
        return BipartiteGraph.from_neighbourhoods(len(ys), rows)

    def add_y(self, x_mask: int) -> "BipartiteGraph":
        """Return a copy with one new Y-vertex adjacent to the X-vertices in ``x_mask``."""
        bit = 1 << self.m
        adj = tuple(a | bit if x_mask >> x & 1 else a for x, a in enumerate(self.adj))
        return BipartiteGraph(self.n, self.m + 1, adj)

    def relabel(self, x_perm: Sequence[int], y_perm: Sequence[int]) -> "BipartiteGraph":
        """Apply ``x -> x_perm[x]`` and ``y -> y_perm[y]``."""
        adj = [0] * self.n
        for x, row in enumerate(self.adj):
            adj[x_perm[x]] = to_mask(y_perm[y] for y in bits(row))
        return BipartiteGraph(self.n, self.m, tuple(adj))


@dataclass(frozen=True)
class Hypergraph:
    """Multihypergraph on vertices {0..n-1}; edge identity is the list position."""

    n: int
    edges: tuple[frozenset[int], ...]

    def __post_init__(self):
        if self.n < 1:
            raise GraphError(f"need at least one vertex, got n={self.n}")
        edges = tuple(frozenset(e) for e in self.edges)
        object.__setattr__(self, "edges", edges)
        for i, e in enumerate(edges):
            if not e:
                raise GraphError(f"edge {i} is empty")
            if min(e) < 0 or max(e) >= self.n:
                raise GraphError(f"edge {i} leaves vertex range 0..{self.n - 1}")

    @property
    def m(self) -> int:
        return len(self.edges)

    def degree(self, v: int) -> int:
        return sum(1 for e in self.edges if v in e)

    def degrees(self) -> list[int]:
        return [self.degree(v) for v in range(self.n)]

    @property
    def min_degree(self) -> int:
        return min(self.degrees())

    def codegree(self, vertices: Iterable[int]) -> int:
        """Number of edges containing every vertex of ``vertices``."""
        s = frozenset(vertices)
        if not s:
            raise GraphError("co-degree is defined for non-empty vertex sets only")
        if min(s) < 0 or max(s) >= self.n:
            raise GraphError(f"vertex set {sorted(s)} leaves range 0..{self.n - 1}")
        return sum(1 for e in self.edges if s <= e)


def incidence_graph(h: Hypergraph) -> BipartiteGraph:
    """X = vertices of ``h``, Y = edges of ``h``, adjacency = containment."""
    adj = [0] * h.n
    for j, e in enumerate(h.edges):
        for v in e:
            adj[v] |= 1 << j
    return BipartiteGraph(h.n, h.m, tuple(adj))


def dual_incidence_graph(h: Hypergraph) -> BipartiteGraph:
    """X = edges of ``h``, Y = vertices of ``h``."""
    if not h.edges:
        raise GraphError("dual incidence graph needs at least one edge")
    return BipartiteGraph(h.m, h.n, tuple(to_mask(e) for e in h.edges))


def hypergraph_of(g: BipartiteGraph) -> Hypergraph:
    """The multihypergraph whose incidence graph is ``g`` (Y-vertices become edges)."""
    return Hypergraph(g.n, tuple(frozenset(bits(c)) for c in g.columns))


@dataclass(frozen=True)
class CycleWitness:
    """Cycle y1 x1 y2 x2 ... yl xl y1 in a bipartite graph.

    ``ys[i]`` is adjacent to ``xs[i-1]`` and ``xs[i]`` (indices mod l).  When
    ``graph`` is given the witness is checked against it on construction.
    """

    xs: tuple[int, ...]
    ys: tuple[int, ...]
    graph: BipartiteGraph | None = field(default=None, compare=False, repr=False)

    def __post_init__(self):
        object.__setattr__(self, "xs", tuple(self.xs))
        object.__setattr__(self, "ys", tuple(self.ys))
        if len(self.xs) != len(self.ys):
            raise GraphError("xs and ys must have equal length")
        if len(self.xs) < 2:
            raise GraphError("a cycle needs at least two X-vertices")
        if len(set(self.xs)) != len(self.xs) or len(set(self.ys)) != len(self.ys):
            raise GraphError("cycle repeats a vertex")
        if self.graph is not None:
            self.validate(self.graph)

    def __len__(self) -> int:
        return len(self.xs)

    @property
    def length(self) -> int:
        """Number of vertices (= edges) on the cycle."""
        return 2 * len(self.xs)

    @property
    def x_mask(self) -> int:
        return to_mask(self.xs)

    @property
    def y_mask(self) -> int:
        return to_mask(self.ys)

    def validate(self, g: BipartiteGraph) -> None:
        ell = len(self.xs)
        for i, x in enumerate(self.xs):
            if not 0 <= x < g.n:
                raise GraphError(f"X-index {x} out of range")
            for y in (self.ys[i], self.ys[(i + 1) % ell]):
                if not 0 <= y < g.m or not g.has_edge(x, y):
                    raise GraphError(f"x{x}-y{y} is not an edge of the host graph")

    def to_dict(self) -> dict:
        return {"xs": list(self.xs), "ys": list(self.ys)}


@dataclass(frozen=True)
class BergeCycleWitness:
    """Berge cycle v1 e1 v2 e2 ... vl el: ``{v_i, v_{i+1}} <= edges[e_i]``."""

    base: tuple[int, ...]
    edges: tuple[int, ...]
    hypergraph: Hypergraph | None = field(default=None, compare=False, repr=False)

    def __post_init__(self):
        object.__setattr__(self, "base", tuple(self.base))
        object.__setattr__(self, "edges", tuple(self.edges))
        if len(self.base) != len(self.edges) or len(self.base) < 2:
            raise GraphError("need equally many (>= 2) base vertices and edges")
        if len(set(self.base)) != len(self.base) or len(set(self.edges)) != len(self.edges):
            raise GraphError("Berge cycle repeats a vertex or an edge")
        if self.hypergraph is not None:
            self.validate(self.hypergraph)

    def __len__(self) -> int:
        return len(self.base)

    def validate(self, h: Hypergraph) -> None:
        ell = len(self.base)
        for i, j in enumerate(self.edges):
            if not 0 <= j < h.m:
                raise GraphError(f"edge index {j} out of range")
            pair = {self.base[i], self.base[(i + 1) % ell]}
            if not pair <= h.edges[j]:
                raise GraphError(f"edge {j} does not contain base vertices {sorted(pair)}")

    def to_dict(self) -> dict:
        return {"base": list(self.base), "edges": list(self.edges)}
