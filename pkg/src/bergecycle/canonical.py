"""Exact canonical forms for bipartite graphs with distinguished parts.

For a fixed ordering of X, a graph is determined up to permutations of Y by
the multiset of its Y-neighbourhoods (bit vectors over X).  The canonical
form is therefore the lexicographically smallest sorted column tuple over
all X-orderings.  Only orderings that sort X by an isomorphism-invariant
colour are tried; the colour is refined like 1-dimensional Weisfeiler-Leman
so that in practice few orderings survive.
"""

from __future__ import annotations

from itertools import permutations, product

from .model import BipartiteGraph, bits

#: default size guard for exact canonicalisation
MAX_N = 8
MAX_M = 16


class TooLargeError(ValueError):
    """Raised when an input exceeds the exact-computation size guard."""


def check_guard(n: int, m: int, max_n: int | None = MAX_N, max_m: int | None = MAX_M) -> None:
    if (max_n is not None and n > max_n) or (max_m is not None and m > max_m):
        raise TooLargeError(
            f"graph with n={n}, m={m} is too large for exact canonicalization "
            f"(guard n <= {max_n}, m <= {max_m})"
        )


def _x_colours(g: BipartiteGraph) -> list:
    """Stable colouring of X by iterated neighbourhood refinement."""
    xc = [0] * g.n
    yc = [0] * g.m
    cols = g.columns
    n_classes = 1
    for _ in range(g.n + g.m):
        ysig = [tuple(sorted(xc[x] for x in bits(c))) for c in cols]
        yc = _relabel(ysig)
        xsig = [(xc[x], tuple(sorted(yc[y] for y in bits(g.adj[x])))) for x in range(g.n)]
        xc_new = _relabel(xsig)
        k = len(set(xc_new))
        xc = xc_new
        if k == n_classes:
            break
        n_classes = k
    return xc


def _relabel(signatures: list) -> list[int]:
    order = {s: i for i, s in enumerate(sorted(set(signatures)))}
    return [order[s] for s in signatures]


def _column_tuple(columns: tuple[int, ...], order: tuple[int, ...]) -> tuple[int, ...]:
    # order[p] = old X-vertex placed at new position p
    out = []
    for c in columns:
        v = 0
        for p, x in enumerate(order):
            if c >> x & 1:
                v |= 1 << p
        out.append(v)
    out.sort()
    return tuple(out)


def canonical_columns(g: BipartiteGraph, *, max_n: int | None = MAX_N,
                      max_m: int | None = MAX_M) -> tuple[int, ...]:
    """Canonical sorted column tuple of ``g`` (invariant under X- and Y-relabelling)."""
    check_guard(g.n, g.m, max_n, max_m)
    colours = _x_colours(g)
    classes: dict[int, list[int]] = {}
    for x in range(g.n):
        classes.setdefault(colours[x], []).append(x)
    groups = [classes[c] for c in sorted(classes)]
    best = None
    for parts in product(*(permutations(grp) for grp in groups)):
        order = tuple(x for part in parts for x in part)
        cand = _column_tuple(g.columns, order)
        if best is None or cand < best:
            best = cand
    return best


def canonical_form(g: BipartiteGraph, **guard) -> bytes:
    """Canonical byte string of ``g``; equal strings mean isomorphic graphs.

    Isomorphisms map X to X and Y to Y; the parts are never swapped.
    """
    cols = canonical_columns(g, **guard)
    width = max(1, (g.n + 7) // 8)
    head = g.n.to_bytes(2, "big") + g.m.to_bytes(2, "big")
    return head + b"".join(c.to_bytes(width, "big") for c in cols)


def canonical_graph(g: BipartiteGraph, **guard) -> BipartiteGraph:
    """The canonical representative of the isomorphism class of ``g``."""
    return BipartiteGraph.from_columns(g.n, canonical_columns(g, **guard))


def is_isomorphic(g: BipartiteGraph, h: BipartiteGraph, **guard) -> bool:
    if (g.n, g.m) != (h.n, h.m):
        return False
    if sorted(g.x_degrees()) != sorted(h.x_degrees()) or sorted(g.y_degrees()) != sorted(h.y_degrees()):
        return False
    return canonical_form(g, **guard) == canonical_form(h, **guard)


def is_canonical_columns(n: int, columns: tuple[int, ...]) -> bool:
    """True iff the sorted column tuple ``columns`` is its own canonical form."""
    g = BipartiteGraph.from_columns(n, columns)
    return canonical_columns(g, max_n=None, max_m=None) == tuple(columns)


def graph_from_canonical(key: bytes) -> BipartiteGraph:
    """Inverse of :func:`canonical_form`."""
    n = int.from_bytes(key[:2], "big")
    m = int.from_bytes(key[2:4], "big")
    width = max(1, (n + 7) // 8)
    body = key[4:]
    cols = tuple(int.from_bytes(body[i * width:(i + 1) * width], "big") for i in range(m))
    return BipartiteGraph.from_columns(n, cols)
