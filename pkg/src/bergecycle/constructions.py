"""Extremal families: G1, G2, G3 (bipartite) and the two hypergraph examples.

Numbering conventions (stable, relied on by tests and docs):

* G1(delta): X = 0..delta-1; Y hubs 0..delta-2, pendant of x is delta-1+x.
* G2(a, b, delta): X = the a vertices of the first block, then the b of the
  second; Y = glued vertex 0, then the delta-1 private vertices of the first
  block, then those of the second.
* G3(n1, n2, n3, delta): X by block; Y = hubs a=0 and b=1, then delta-2
  private vertices per block.
* H3(n): V1 = 0..k-1 and V2 = k-1..n-1 share v = k-1; edges of V1 first, by
  size then lexicographically, then those of V2.
* H4(n): V1 = 0..|V1|-1, V2 the rest; cross edges lexicographically, then V1.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations

from .model import BipartiteGraph, GraphError, Hypergraph, to_mask

FAMILIES = ("G1", "G2", "G3", "H3", "H4")


def gen_g1(delta: int) -> BipartiteGraph:
    """K_{delta,delta-1} plus a private degree-1 neighbour for every X-vertex."""
    if delta < 2:
        raise GraphError(f"G1 needs delta >= 2, got {delta}")
    hubs = (1 << (delta - 1)) - 1
    adj = tuple(hubs | 1 << (delta - 1 + x) for x in range(delta))
    return BipartiteGraph(delta, 2 * delta - 1, adj)


def gen_g2(a: int, b: int, delta: int) -> BipartiteGraph:
    """K_{a,delta} and K_{b,delta} glued at one vertex of their delta-sides."""
    if b < 1 or a < b:
        raise GraphError(f"G2 needs a >= b >= 1, got a={a}, b={b}")
    if delta < 2:
        raise GraphError(f"G2 needs delta >= 2, got {delta}")
    first = 1 | to_mask(range(1, delta))
    second = 1 | to_mask(range(delta, 2 * delta - 1))
    return BipartiteGraph(a + b, 2 * delta - 1, (first,) * a + (second,) * b)


def gen_g3(n1: int, n2: int, n3: int, delta: int) -> BipartiteGraph:
    """Three blocks K_{delta-2, n_i} plus two hubs adjacent to all of X."""
    if not n1 >= n2 >= n3 >= 1:
        raise GraphError(f"G3 needs n1 >= n2 >= n3 >= 1, got {(n1, n2, n3)}")
    if delta < 3:
        raise GraphError(f"G3 needs delta >= 3, got {delta}")
    adj = []
    for block, size in enumerate((n1, n2, n3)):
        first = 2 + block * (delta - 2)
        row = 0b11 | to_mask(range(first, first + delta - 2))
        adj.extend([row] * size)
    return BipartiteGraph(n1 + n2 + n3, 3 * delta - 4, tuple(adj))


def _subsets_at_least_2(vertices: list[int]) -> list[frozenset[int]]:
    return [frozenset(c) for k in range(2, len(vertices) + 1)
            for c in combinations(vertices, k)]


def construction3_parts(n: int) -> tuple[list[int], list[int]]:
    k1 = (n + 1) // 2
    return list(range(k1)), list(range(k1 - 1, n))


def gen_construction3(n: int) -> Hypergraph:
    """All sets of size >= 2 inside V1 or inside V2, where V1 ∩ V2 = {v}."""
    if n < 4:
        raise GraphError(f"construction 3 needs n >= 4, got {n}")
    v1, v2 = construction3_parts(n)
    return Hypergraph(n, tuple(_subsets_at_least_2(v1) + _subsets_at_least_2(v2)))


def construction4_parts(n: int) -> tuple[list[int], list[int]]:
    s1 = -(-(n + 2) // 2)
    return list(range(s1)), list(range(s1, n))


def gen_construction4(n: int) -> Hypergraph:
    """Edges of size ceil(n/4) meeting V1 in one vertex, plus V1 itself."""
    if n < 8:
        raise GraphError(f"construction 4 needs n >= 8, got {n}")
    v1, v2 = construction4_parts(n)
    k = -(-n // 4)
    if k - 1 > len(v2):
        raise GraphError(f"edge size {k} does not fit |V2| = {len(v2)}")
    cross = [frozenset((u, *rest)) for u in v1 for rest in combinations(v2, k - 1)]
    return Hypergraph(n, tuple(cross + [frozenset(v1)]))


@dataclass(frozen=True)
class ConstructionSpec:
    family: str
    params: dict = field(default_factory=dict)
    # parity offset (1 when delta is even); recorded, never used
    alpha: int | None = None

    def __post_init__(self):
        if self.family not in FAMILIES:
            raise GraphError(f"unknown family {self.family!r}")
        if self.alpha is None and "delta" in self.params:
            object.__setattr__(self, "alpha", 1 if self.params["delta"] % 2 == 0 else 0)

    def build(self):
        p = self.params
        if self.family == "G1":
            return gen_g1(p["delta"])
        if self.family == "G2":
            return gen_g2(p["a"], p["b"], p["delta"])
        if self.family == "G3":
            return gen_g3(p["n1"], p["n2"], p["n3"], p["delta"])
        if self.family == "H3":
            return gen_construction3(p["n"])
        return gen_construction4(p["n"])


@dataclass
class Certification:
    """Stated properties of a generated graph next to the computed ones."""

    family: str
    params: dict
    n: int
    m: int
    delta: int
    claimed: dict
    observed: dict
    degenerate: bool = False

    @property
    def mismatches(self) -> list[str]:
        return sorted(k for k in self.claimed if self.claimed[k] != self.observed.get(k))

    @property
    def ok(self) -> bool:
        return not self.mismatches

    def to_dict(self) -> dict:
        return {"family": self.family, "params": self.params, "n": self.n, "m": self.m,
                "delta": self.delta, "claimed": self.claimed, "observed": self.observed,
                "degenerate": self.degenerate, "mismatches": self.mismatches}

    def summary(self) -> str:
        ell = self.observed.get("longest_cycle_x")
        cyc = "no cycle" if not ell else f"longest cycle l={ell} (length {2 * ell})"
        flag = " [degenerate]" if self.degenerate else ""
        status = "ok" if self.ok else "MISMATCH " + ",".join(self.mismatches)
        return (f"{self.family}{tuple(self.params.values())}: n={self.n} m={self.m} "
                f"delta={self.delta}, {cyc}{flag}: {status}")


def certify(spec: ConstructionSpec) -> Certification:
    """Machine-check the stated box, longest cycle and connectivity of a family member."""
    from .cycles import circumference, has_hamiltonian_berge_cycle
    from .model import incidence_graph
    from .structure import is_2connected

    obj = spec.build()
    p = spec.params
    if spec.family in ("H3", "H4"):
        g = incidence_graph(obj)
        claimed = {"hamiltonian_berge": False}
        observed = {"hamiltonian_berge": has_hamiltonian_berge_cycle(obj),
                    "min_degree": obj.min_degree}
        if spec.family == "H3":
            k1 = (p["n"] + 1) // 2
            claimed["min_degree"] = 2 ** (k1 - 1) - 1
            claimed["incidence_2connected"] = False
        else:
            claimed["incidence_2connected"] = True
            claimed["min_pair_codegree_positive"] = True
            observed["min_pair_codegree_positive"] = all(
                obj.codegree(pair) > 0 for pair in combinations(range(obj.n), 2))
        observed["incidence_2connected"] = is_2connected(g)
        return Certification(spec.family, dict(p), obj.n, obj.m, obj.min_degree,
                             claimed, observed)

    g = obj
    delta = p["delta"]
    if spec.family == "G1":
        expected, m_claim, two_conn = delta - 1, 2 * delta - 1, False
    elif spec.family == "G2":
        expected, m_claim, two_conn = p["a"], 2 * delta - 1, False
    else:
        expected, m_claim, two_conn = p["n1"] + p["n2"], 3 * delta - 4, True
    degenerate = expected < 2
    claimed = {"m": m_claim, "min_x_degree": delta,
               "longest_cycle_x": expected if not degenerate else 0}
    observed = {"m": g.m, "min_x_degree": g.min_x_degree, "longest_cycle_x": circumference(g)}
    if g.n + g.m >= 3:
        claimed["2connected"] = two_conn
        observed["2connected"] = is_2connected(g)
    return Certification(spec.family, dict(p), g.n, g.m, delta, claimed, observed, degenerate)
