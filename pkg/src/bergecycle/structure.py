"""Connectivity, the 2-connected-subgraph condition, tight pairs, crossings and audits."""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations

from .canonical import MAX_N, MAX_M, check_guard, is_isomorphic
from .constructions import gen_g1, gen_g2
from .cycles import circumference, longest_cycles
from .model import BipartiteGraph, CycleWitness, GraphError, Hypergraph, bits, incidence_graph, popcount, to_mask


def _adjacency_lists(g: BipartiteGraph) -> list[list[int]]:
    """Plain adjacency lists; X-vertex x is node x, Y-vertex y is node n + y."""
    nbrs = [[g.n + y for y in bits(row)] for row in g.adj]
    nbrs += [list(bits(col)) for col in g.columns]
    return nbrs


def _reachable(nbrs: list[list[int]], source: int, removed: int = -1) -> set[int]:
    seen = {source}
    stack = [source]
    while stack:
        u = stack.pop()
        for v in nbrs[u]:
            if v != removed and v not in seen:
                seen.add(v)
                stack.append(v)
    return seen


def cut_vertices(g: BipartiteGraph) -> list[int]:
    """Articulation points (node numbering as in ``_adjacency_lists``), iterative Tarjan."""
    nbrs = _adjacency_lists(g)
    total = len(nbrs)
    disc = [-1] * total
    low = [0] * total
    cuts = set()
    clock = 0
    for root in range(total):
        if disc[root] != -1:
            continue
        disc[root] = low[root] = clock
        clock += 1
        root_children = 0
        stack = [(root, -1, iter(nbrs[root]))]
        while stack:
            u, parent, it = stack[-1]
            advanced = False
            for v in it:
                if disc[v] == -1:
                    disc[v] = low[v] = clock
                    clock += 1
                    if u == root:
                        root_children += 1
                    stack.append((v, u, iter(nbrs[v])))
                    advanced = True
                    break
                if v != parent:
                    low[u] = min(low[u], disc[v])
            if advanced:
                continue
            stack.pop()
            if parent != -1:
                low[parent] = min(low[parent], low[u])
                if parent != root and low[u] >= disc[parent]:
                    cuts.add(parent)
        if root_children > 1:
            cuts.add(root)
    return sorted(cuts)


def is_connected(g: BipartiteGraph) -> bool:
    nbrs = _adjacency_lists(g)
    return len(_reachable(nbrs, 0)) == len(nbrs)


def is_2connected(g: BipartiteGraph) -> bool:
    """Connected, at least 3 vertices, and no cut vertex."""
    if g.n + g.m < 3:
        raise GraphError("2-connectivity needs at least 3 vertices")
    return is_connected(g) and not cut_vertices(g)


def is_2connected_hypergraph(h: Hypergraph) -> bool:
    return is_2connected(incidence_graph(h))


# -- the 2-connected-subgraph condition --------------------------------------

def lll_candidate(g: BipartiteGraph, amask: int) -> int:
    """Y-vertices with at least two neighbours in A: every valid B lies inside."""
    return to_mask(y for y, col in enumerate(g.columns) if popcount(col & amask) >= 2)


def check_condition_lll_for(g: BipartiteGraph, a) -> tuple[int, ...] | None:
    """Return B ⊆ Y with |B| >= |A| and G[A ∪ B] 2-connected, or None.

    Any valid B has all its vertices of degree >= 2 into A, and adding such
    vertices to a 2-connected graph keeps it 2-connected.  So a valid B
    exists iff the largest candidate is valid, and that is what is returned.
    """
    xs = sorted(set(a))
    if len(xs) < 3:
        raise GraphError(f"condition needs |A| >= 3, got {len(xs)}")
    bmask = lll_candidate(g, to_mask(xs))
    if popcount(bmask) < len(xs):
        return None
    if not is_2connected(g.induced(xs, bmask)):
        return None
    return tuple(bits(bmask))


def first_lll_failure(g: BipartiteGraph) -> tuple[int, ...] | None:
    """First A (by size, then lexicographically) violating the condition."""
    if g.n < 3:
        raise GraphError("condition needs |X| >= 3")
    for k in range(3, g.n + 1):
        for a in combinations(range(g.n), k):
            if check_condition_lll_for(g, a) is None:
                return a
    return None


def satisfies_lll(g: BipartiteGraph) -> bool:
    return first_lll_failure(g) is None


# -- tight pairs --------------------------------------------------------------

@dataclass(frozen=True)
class TightPair:
    cycle: CycleWitness
    x: int
    t: int


def tight_pairs(g: BipartiteGraph, *, max_n: int | None = MAX_N) -> list[TightPair]:
    """Every tight pair (C, x) of ``g``; empty iff ``g`` is acyclic or has a spanning-X cycle."""
    if max_n is not None and g.n > max_n:
        raise GraphError(f"tight-pair enumeration is guarded to n <= {max_n}, got n={g.n}")
    best = -1
    pairs: list[TightPair] = []
    for c in longest_cycles(g):
        ymask = c.y_mask
        for x in range(g.n):
            if x in c.xs:
                continue
            t = popcount(g.adj[x] & ymask)
            if t > best:
                best, pairs = t, []
            if t == best:
                pairs.append(TightPair(c, x, t))
    return pairs


def find_tight_pair(g: BipartiteGraph, **guard) -> TightPair | None:
    pairs = tight_pairs(g, **guard)
    return pairs[0] if pairs else None


# -- crossing -----------------------------------------------------------------

@dataclass(frozen=True)
class CrossingQuery:
    cycle: CycleWitness
    i: int
    j: int
    crossing: bool
    witness: tuple[int, int] | None = None


def _in_segment(k: int, a: int, b: int, ell: int) -> bool:
    """Is y_k on the clockwise segment C[a, b] (1-based, indices mod ell)?"""
    a, b, k = (a - 1) % ell, (b - 1) % ell, (k - 1) % ell
    return (k - a) % ell <= (b - a) % ell


def are_crossing(g: BipartiteGraph, cycle: CycleWitness, i: int, j: int) -> CrossingQuery:
    """Evaluate the crossing definition for x_i, x_j (1-based positions on ``cycle``)."""
    ell = len(cycle)
    if not 1 <= i < j <= ell:
        raise GraphError(f"need 1 <= i < j <= {ell}, got i={i}, j={j}")
    cycle.validate(g)
    ni = g.adj[cycle.xs[i - 1]]
    nj = g.adj[cycle.xs[j - 1]]

    def y(k: int) -> int:
        return cycle.ys[k - 1]

    excluded = ({i, i % ell + 1}, {j, j % ell + 1})
    for ip in range(1, ell + 1):
        if not ni >> y(ip) & 1:
            continue
        for jp in range(1, ell + 1):
            if not nj >> y(jp) & 1 or {ip, jp} in excluded:
                continue
            first = ip == jp + 1 and i + 1 <= jp <= j - 1
            second = (jp == ip % ell + 1 and _in_segment(ip, j + 1, i, ell)
                      and _in_segment(jp, j + 1, i, ell))
            if first or second:
                return CrossingQuery(cycle, i, j, True, (ip, jp))
    return CrossingQuery(cycle, i, j, False)


# -- audits -------------------------------------------------------------------

@dataclass
class AuditReport:
    name: str
    hypotheses_met: bool = True
    checked: int = 0
    violations: list = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.violations

    def merge(self, other: "AuditReport") -> None:
        self.checked += other.checked
        self.violations.extend(other.violations)

    def to_dict(self) -> dict:
        return {"name": self.name, "hypotheses_met": self.hypotheses_met,
                "checked": self.checked, "violations": len(self.violations),
                "first_violation": self.violations[0] if self.violations else None}


def _require_longest(g: BipartiteGraph, cycle: CycleWitness) -> None:
    cycle.validate(g)
    if len(cycle) != circumference(g):
        raise GraphError("cycle is not a longest cycle of the graph")


def audit_noncrossing_bound(g: BipartiteGraph, cycle: CycleWitness) -> AuditReport:
    """Non-crossing on-cycle pairs have |N(x_i)∩V(C)| + |N(x_j)∩V(C)| <= |V(C)∩Y| + 2."""
    _require_longest(g, cycle)
    report = AuditReport("noncrossing-bound")
    ell = len(cycle)
    ymask = cycle.y_mask
    for i, j in combinations(range(1, ell + 1), 2):
        if are_crossing(g, cycle, i, j).crossing:
            continue
        report.checked += 1
        total = popcount(g.adj[cycle.xs[i - 1]] & ymask) + popcount(g.adj[cycle.xs[j - 1]] & ymask)
        if total > ell + 2:
            report.violations.append({"cycle": cycle.to_dict(), "i": i, "j": j, "sum": total})
    return report


def separates(g: BipartiteGraph, x: int, y: int, targets: set[int]) -> bool:
    """Does deleting X-vertex ``x`` cut Y-vertex ``y`` off from every node in ``targets``?"""
    nbrs = _adjacency_lists(g)
    return not (_reachable(nbrs, g.n + y, removed=x) & targets)


def audit_separation_property(g: BipartiteGraph, cycle: CycleWitness, x: int) -> AuditReport:
    """With V(C)∩Y ⊆ N(x) and n <= delta, each x_i on C separates its off-cycle neighbours."""
    report = AuditReport("separation")
    _require_longest(g, cycle)
    ymask = cycle.y_mask
    if x in cycle.xs or ymask & ~g.adj[x] or g.n > g.min_x_degree:
        report.hypotheses_met = False
        return report
    on_cycle = set(cycle.xs) | {g.n + y for y in cycle.ys}
    for xi in cycle.xs:
        for y in bits(g.adj[xi] & ~ymask):
            report.checked += 1
            if not separates(g, xi, y, on_cycle - {xi}):
                report.violations.append({"cycle": cycle.to_dict(), "x": x, "x_i": xi, "y": y})
    return report


def audit_tight_pair(g: BipartiteGraph, tp: TightPair) -> dict[str, AuditReport]:
    """Disjointness checks, the m >= 3*delta-4 bound and separation, for one tight pair."""
    c, x = tp.cycle, tp.x
    ell = len(c)
    ymask = c.y_mask
    off = [row & ~ymask for row in g.adj]
    hits = [k for k in range(ell) if g.adj[x] >> c.ys[k] & 1]

    nb = AuditReport("neighbor")
    for k in hits:
        # y_k is adjacent to x_k and to x_{k-1}
        for xi in (c.xs[k], c.xs[k - 1]):
            nb.checked += 1
            if off[xi] & off[x]:
                nb.violations.append({"cycle": c.to_dict(), "x": x, "x_i": xi})

    nb3 = AuditReport("neighbor3")
    for k1, k2 in combinations(hits, 2):
        nb3.checked += 1
        if off[c.xs[k1]] & off[c.xs[k2]]:
            nb3.violations.append({"cycle": c.to_dict(), "x": x, "i": k1 + 1, "j": k2 + 1})

    lem = AuditReport("lemT")
    delta = g.min_x_degree
    if 2 <= tp.t < ell and g.n <= delta:
        lem.checked = 1
        if g.m < 3 * delta - 4:
            lem.violations.append({"cycle": c.to_dict(), "x": x, "t": tp.t, "m": g.m, "delta": delta})
    else:
        lem.hypotheses_met = False

    sep = audit_separation_property(g, c, x)
    return {r.name: r for r in (nb, nb3, lem, sep)}


# -- exception classification ---------------------------------------------------

@dataclass(frozen=True)
class Classification:
    kind: str  # "G1", "G2" or "other"
    params: tuple[int, ...] = ()

    def __str__(self) -> str:
        if self.kind == "other":
            return "other"
        return f"iso-{self.kind}({','.join(map(str, self.params))})"


def classify_exception(g: BipartiteGraph, *, max_n: int | None = MAX_N,
                       max_m: int | None = MAX_M) -> Classification:
    """Identify ``g`` as G1(n), some G2(a, b) with a + b = n, or neither."""
    check_guard(g.n, g.m, max_n, max_m)
    guard = {"max_n": max_n, "max_m": max_m}
    if g.n >= 2 and g.m == 2 * g.n - 1 and is_isomorphic(g, gen_g1(g.n), **guard):
        return Classification("G1", (g.n,))
    if g.m % 2 == 1 and (g.m + 1) // 2 >= 2:
        delta = (g.m + 1) // 2
        for b in range(1, g.n // 2 + 1):
            a = g.n - b
            if is_isomorphic(g, gen_g2(a, b, delta), **guard):
                return Classification("G2", (a, b))
    return Classification("other")
