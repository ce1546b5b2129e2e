"""Text and JSON formats for bipartite graphs and hypergraphs.

Text format (``#`` starts a comment, tokens are whitespace separated)::

    bigraph <n> <m>
    <x>: <y> <y> ...        # exactly one line per X-vertex

    hypergraph <n>
    e: <v> <v> ...          # one line per edge, in edge order

The structured format is a JSON object ``{"kind", "n", "m", "adj"}`` or
``{"kind", "n", "edges"}`` with 0-based integer indices.
"""

from __future__ import annotations

import json
from typing import Union

from .model import BipartiteGraph, GraphError, Hypergraph, bits

Structure = Union[BipartiteGraph, Hypergraph]


class ParseError(ValueError):
    def __init__(self, message: str, line: int | None = None):
        self.line = line
        super().__init__(f"line {line}: {message}" if line is not None else message)


def _int(tok: str, what: str, line: int) -> int:
    try:
        value = int(tok)
    except ValueError:
        raise ParseError(f"{what} {tok!r} is not an integer", line) from None
    if value < 0:
        raise ParseError(f"{what} {value} is negative", line)
    return value


def parse_text(text: str) -> Structure:
    lines = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        body = raw.split("#", 1)[0].strip()
        if body:
            lines.append((lineno, body))
    if not lines:
        raise ParseError("empty input")
    lineno, header = lines[0]
    head = header.split()
    if head[0] == "bigraph":
        if len(head) != 3:
            raise ParseError("malformed header, expected 'bigraph <n> <m>'", lineno)
        n, m = _int(head[1], "n", lineno), _int(head[2], "m", lineno)
        if n < 1:
            raise ParseError("n must be at least 1", lineno)
        return _parse_bigraph(n, m, lines[1:], lineno)
    if head[0] == "hypergraph":
        if len(head) != 2:
            raise ParseError("malformed header, expected 'hypergraph <n>'", lineno)
        n = _int(head[1], "n", lineno)
        if n < 1:
            raise ParseError("n must be at least 1", lineno)
        return _parse_hypergraph(n, lines[1:])
    raise ParseError(f"malformed header {header!r}", lineno)


def _parse_bigraph(n: int, m: int, lines, header_line: int) -> BipartiteGraph:
    adj: list[int | None] = [None] * n
    for lineno, body in lines:
        label, sep, rest = body.partition(":")
        if not sep:
            raise ParseError("expected '<x-index>: <y-index>*'", lineno)
        x = _int(label.strip(), "X index", lineno)
        if x >= n:
            raise ParseError(f"X index {x} out of range", lineno)
        if adj[x] is not None:
            raise ParseError(f"X index {x} listed twice", lineno)
        row = 0
        for tok in rest.split():
            y = _int(tok, "Y index", lineno)
            if y >= m:
                raise ParseError(f"Y index {y} out of range", lineno)
            if row >> y & 1:
                raise ParseError(f"duplicate Y index {y}", lineno)
            row |= 1 << y
        adj[x] = row
    missing = [x for x, row in enumerate(adj) if row is None]
    if missing:
        raise ParseError(f"missing adjacency line for X index {missing[0]}", header_line)
    return BipartiteGraph(n, m, tuple(adj))


def _parse_hypergraph(n: int, lines) -> Hypergraph:
    edges = []
    for lineno, body in lines:
        label, sep, rest = body.partition(":")
        if not sep or label.strip() != "e":
            raise ParseError("expected 'e: <v-index>*'", lineno)
        edge = set()
        for tok in rest.split():
            v = _int(tok, "vertex index", lineno)
            if v >= n:
                raise ParseError(f"vertex index {v} out of range", lineno)
            if v in edge:
                raise ParseError(f"duplicate vertex index {v}", lineno)
            edge.add(v)
        if not edge:
            raise ParseError("empty edge", lineno)
        edges.append(frozenset(edge))
    return Hypergraph(n, tuple(edges))


def to_text(obj: Structure) -> str:
    if isinstance(obj, BipartiteGraph):
        out = [f"bigraph {obj.n} {obj.m}"]
        for x, row in enumerate(obj.adj):
            out.append(" ".join([f"{x}:"] + [str(y) for y in bits(row)]))
    else:
        out = [f"hypergraph {obj.n}"]
        for e in obj.edges:
            out.append(" ".join(["e:"] + [str(v) for v in sorted(e)]))
    return "\n".join(out) + "\n"


def to_dict(obj: Structure) -> dict:
    if isinstance(obj, BipartiteGraph):
        return {"kind": "bigraph", "n": obj.n, "m": obj.m,
                "adj": [list(bits(row)) for row in obj.adj]}
    return {"kind": "hypergraph", "n": obj.n, "edges": [sorted(e) for e in obj.edges]}


def from_dict(data: dict) -> Structure:
    try:
        kind = data["kind"]
        n = data["n"]
        if kind == "bigraph":
            m = data["m"]
            rows = data["adj"]
            if len(rows) != n:
                raise ParseError(f"expected {n} adjacency lists, got {len(rows)}")
            for x, row in enumerate(rows):
                for y in row:
                    if not isinstance(y, int) or not 0 <= y < m:
                        raise ParseError(f"Y index {y} out of range in row {x}")
            return BipartiteGraph.from_neighbourhoods(m, rows)
        if kind == "hypergraph":
            return Hypergraph(n, tuple(frozenset(e) for e in data["edges"]))
    except KeyError as exc:
        raise ParseError(f"missing field {exc.args[0]!r}") from None
    except GraphError as exc:
        raise ParseError(str(exc)) from None
    raise ParseError(f"unknown kind {kind!r}")


def to_json(obj: Structure) -> str:
    return json.dumps(to_dict(obj), sort_keys=True) + "\n"


def parse(text: str) -> Structure:
    """Parse either format; JSON is recognised by a leading ``{``."""
    if text.lstrip().startswith("{"):
        try:
            data = json.loads(text)
        except json.JSONDecodeError as exc:
            raise ParseError(f"invalid JSON: {exc.msg}", exc.lineno) from None
        return from_dict(data)
    return parse_text(text)


def serialize(obj: Structure, fmt: str = "text") -> str:
    if fmt == "text":
        return to_text(obj)
    if fmt == "json":
        return to_json(obj)
    raise ValueError(f"unknown format {fmt!r}")


def read_file(path) -> Structure:
    with open(path) as fh:
        return parse(fh.read())


def write_file(obj: Structure, path, fmt: str = "text") -> None:
    with open(path, "w") as fh:
        fh.write(serialize(obj, fmt))
