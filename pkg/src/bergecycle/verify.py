"""Enumeration of G(n, m, delta) up to isomorphism and exhaustive theorem checks.

Canonical enumeration walks non-decreasing tuples of Y-neighbourhoods (bit
vectors over X), which removes Y-permutations, and keeps a tuple only if it
is its own canonical form, which removes X-permutations.  Every isomorphism
class is produced exactly once.  Work is split by the first column so that
workers can run independently; results are merged in a fixed order.
"""

from __future__ import annotations

import logging
import re
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from itertools import product
from typing import Callable, Iterable, Iterator

from .canonical import (MAX_M, MAX_N, canonical_form, check_guard, graph_from_canonical,
                        is_canonical_columns)
from .cycles import first_non_pancyclic_subset, has_spanning_x_cycle, longest_cycle, longest_cycles
from .io import to_dict
from .model import BipartiteGraph, GraphError, bits, popcount
from .structure import (AuditReport, audit_noncrossing_bound, audit_tight_pair,
                        classify_exception, first_lll_failure, is_2connected, tight_pairs)

log = logging.getLogger(__name__)

THEOREMS = ("jackson", "mainj", "jackson2", "mainpan", "mainj2", "jackson22")
HYPERGRAPH_THEOREMS = ("mainj2", "jackson22")
#: theorems whose exceptions are allowed when isomorphic to G1 or G2
CLASSIFIED = ("jackson2", "jackson22")


class BoxError(ValueError):
    """Raised when a parameter box lies outside a theorem's hypotheses."""


# -- enumeration ----------------------------------------------------------------

def _column_tuples(n: int, m: int, delta: int, first: int | None = None) -> Iterator[tuple[int, ...]]:
    """Non-decreasing tuples of ``m`` column masks over ``n`` bits with every X-degree >= delta."""
    top = 1 << n
    masks = [list(bits(c)) for c in range(top)]
    deg = [0] * n
    cols: list[int] = []

    def rec(lo: int, left: int) -> Iterator[tuple[int, ...]]:
        if min(deg) + left < delta:
            return
        if left == 0:
            yield tuple(cols)
            return
        hi = top if first is None or cols else first + 1
        if first is not None and not cols:
            lo = first
        for c in range(lo, hi):
            for x in masks[c]:
                deg[x] += 1
            cols.append(c)
            yield from rec(c, left - 1)
            cols.pop()
            for x in masks[c]:
                deg[x] -= 1

    if m == 0:
        if delta <= 0:
            yield ()
        return
    yield from rec(0, m)


def _guard(n: int, m: int, guard: bool) -> None:
    if n < 1 or m < 0:
        raise GraphError(f"invalid sizes n={n}, m={m}")
    if guard:
        check_guard(n, m, MAX_N, MAX_M)


def enumerate_gnmd(n: int, m: int, delta: int, *, guard: bool = True,
                   first: int | None = None) -> Iterator[BipartiteGraph]:
    """One representative per isomorphism class of graphs with |X|=n, |Y|=m, min X-degree >= delta."""
    _guard(n, m, guard)
    for cols in _column_tuples(n, m, delta, first):
        if is_canonical_columns(n, cols):
            yield BipartiteGraph.from_columns(n, cols)


def enumerate_labeled(n: int, m: int, delta: int, *, guard: bool = True) -> Iterator[BipartiteGraph]:
    """Every labelled graph with |X|=n, |Y|=m and min X-degree >= delta."""
    _guard(n, m, guard)
    rows = [r for r in range(1 << m) if popcount(r) >= delta]
    for adj in product(rows, repeat=n):
        yield BipartiteGraph(n, m, adj)


def work_items(n: int) -> list[int]:
    return list(range(1 << n))


# -- theorem boxes -----------------------------------------------------------------

@dataclass(frozen=True)
class ParameterBox:
    theorem: str
    n: int
    m: int
    delta: int

    def validate(self) -> None:
        t, n, m, d = self.theorem, self.n, self.m, self.delta
        if t not in THEOREMS:
            raise BoxError(f"unknown theorem {t!r}; expected one of {', '.join(THEOREMS)}")
        if n < 2:
            raise BoxError("box outside theorem hypotheses: n >= 2 required")
        rules = {
            "jackson": (n <= d and m <= 2 * d - 2, "n <= delta and m <= 2*delta - 2"),
            "mainj": (n <= d <= m <= 3 * d - 5, "n <= delta <= m <= 3*delta - 5"),
            "jackson2": (d >= n and m <= 2 * d - 1, "delta >= n and m <= 2*delta - 1"),
            "mainpan": (d >= n and m <= 3 * d - 5 and n >= 3, "delta >= n, m <= 3*delta - 5, n >= 3"),
            # delta >= (m+5)/3 is the same as m <= 3*delta - 5
            "mainj2": (d >= n and 3 * d >= m + 5 and n >= 3, "delta >= n, delta >= (m+5)/3, n >= 3"),
            "jackson22": (d >= n and 2 * d >= m + 1 and n >= 3, "delta >= n, delta >= (m+1)/2, n >= 3"),
        }
        ok, text = rules[t]
        if not ok:
            raise BoxError(f"box outside theorem hypotheses: {t} needs {text} "
                           f"(got n={n}, m={m}, delta={d})")

    def to_dict(self) -> dict:
        return {"theorem": self.theorem, "n": self.n, "m": self.m, "delta": self.delta}


def _evaluate(theorem: str, g: BipartiteGraph) -> tuple[bool, bool, dict | None]:
    """(hypotheses hold, conclusion holds, exception detail)."""
    if theorem in HYPERGRAPH_THEOREMS and min(g.y_degrees(), default=1) == 0:
        return False, True, None  # an isolated Y-vertex would be an empty edge
    if theorem in ("mainj", "mainj2") and not is_2connected(g):
        return False, True, None
    if theorem == "mainpan":
        if first_lll_failure(g) is not None:
            return False, True, None
        failing = first_non_pancyclic_subset(g)
        if failing is None:
            return True, True, None
        return True, False, {"failing_subset": list(failing)}
    if has_spanning_x_cycle(g):
        return True, True, None
    w = longest_cycle(g)
    detail = {"longest_cycle": None if w is None else w.to_dict()}
    if theorem in CLASSIFIED:
        detail["classification"] = str(classify_exception(g, max_n=None, max_m=None))
    return True, False, detail


@dataclass
class VerificationReport:
    box: ParameterBox
    mode: str
    total: int = 0
    hypothesis: int = 0
    passed: int = 0
    exceptions: list[dict] = field(default_factory=list)
    notes: list[str] = field(default_factory=list)
    wall_time: float = 0.0

    @property
    def violations(self) -> list[dict]:
        if self.box.theorem in CLASSIFIED:
            return [e for e in self.exceptions if e["classification"] == "other"]
        return list(self.exceptions)

    @property
    def ok(self) -> bool:
        return not self.violations

    def to_dict(self, timing: bool = False) -> dict:
        out = {"box": self.box.to_dict(), "mode": self.mode, "total": self.total,
               "hypothesis": self.hypothesis, "passed": self.passed,
               "exceptions": self.exceptions, "violations": len(self.violations),
               "ok": self.ok, "notes": self.notes}
        if timing:
            out["wall_time"] = round(self.wall_time, 3)
        return out

    def table(self) -> str:
        b = self.box
        lines = [f"theorem {b.theorem}  n={b.n} m={b.m} delta={b.delta}  ({self.mode})",
                 f"  classes enumerated      {self.total}",
                 f"  hypotheses satisfied    {self.hypothesis}",
                 f"  conclusion holds        {self.passed}",
                 f"  exceptions              {len(self.exceptions)}"]
        for e in self.exceptions:
            label = e.get("classification", "")
            lines.append(f"    {e['canonical']}  {label}".rstrip())
        lines.append(f"  violations              {len(self.violations)}")
        lines.extend(f"  note: {note}" for note in self.notes)
        lines.append("  result                  " + ("PASS" if self.ok else "FAIL"))
        return "\n".join(lines)


def _verify_chunk(args) -> tuple[int, int, int, list[dict]]:
    theorem, n, m, delta, first = args
    total = hyp = passed = 0
    exceptions = []
    for g in enumerate_gnmd(n, m, delta, guard=False, first=first):
        total += 1
        holds, concl, detail = _evaluate(theorem, g)
        if not holds:
            continue
        hyp += 1
        if concl:
            passed += 1
        else:
            exceptions.append({"canonical": canonical_form(g, max_n=None, max_m=None).hex(),
                               "graph": to_dict(g), **detail})
    return total, hyp, passed, exceptions


def _map(fn, items: list, workers: int) -> list:
    if workers <= 1 or len(items) <= 1:
        return [fn(item) for item in items]
    with ProcessPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(fn, items))


def verify_theorem(box: ParameterBox, *, workers: int = 1, mode: str = "canonical",
                   guard: bool = True) -> VerificationReport:
    """Check the theorem's conclusion on every class in the box satisfying its hypotheses."""
    box.validate()
    _guard(box.n, box.m, guard)
    start = time.perf_counter()
    report = VerificationReport(box, mode)
    if mode == "canonical":
        items = [(box.theorem, box.n, box.m, box.delta, c) for c in work_items(box.n)]
        parts = _map(_verify_chunk, items, workers)
    elif mode == "exhaustive-labeled":
        parts = [_verify_labeled(box)]
    else:
        raise ValueError(f"unknown enumeration mode {mode!r}")
    for total, hyp, passed, exceptions in parts:
        report.total += total
        report.hypothesis += hyp
        report.passed += passed
        report.exceptions.extend(exceptions)
    report.exceptions.sort(key=lambda e: e["canonical"])
    if box.theorem == "jackson2" and box.n == 2:
        report.notes.append("n=2: boundary case per proof text (acyclic graphs reduce to G2(1,1))")
    report.wall_time = time.perf_counter() - start
    log.info("%s n=%d m=%d delta=%d: %d classes, %d exceptions in %.2fs", box.theorem,
             box.n, box.m, box.delta, report.total, len(report.exceptions), report.wall_time)
    return report


def _verify_labeled(box: ParameterBox) -> tuple[int, int, int, list[dict]]:
    total = hyp = passed = 0
    seen: dict[str, dict] = {}
    for g in enumerate_labeled(box.n, box.m, box.delta, guard=False):
        total += 1
        holds, concl, detail = _evaluate(box.theorem, g)
        if not holds:
            continue
        hyp += 1
        if concl:
            passed += 1
            continue
        key = canonical_form(g, max_n=None, max_m=None).hex()
        if key not in seen:
            canon = graph_from_canonical(bytes.fromhex(key))
            _, _, cdetail = _evaluate(box.theorem, canon)
            seen[key] = {"canonical": key, "graph": to_dict(canon), **cdetail}
    return total, hyp, passed, list(seen.values())


# -- scanning -----------------------------------------------------------------------

def _predicates() -> dict[str, Callable[[BipartiteGraph], bool]]:
    def two_conn(g):
        return g.n + g.m >= 3 and is_2connected(g)

    def lll(g):
        return g.n >= 3 and first_lll_failure(g) is None

    def pancyclic(g):
        return g.n >= 3 and first_non_pancyclic_subset(g) is None

    return {
        "true": lambda g: True,
        "false": lambda g: False,
        "spanning-x-cycle": has_spanning_x_cycle,
        "2-connected": two_conn,
        "2connected": two_conn,
        "lll": lll,
        "x-super-pancyclic": pancyclic,
        "super-pancyclic": pancyclic,
        "tight-pair": lambda g: bool(tight_pairs(g, max_n=None)),
        "iso-g1": lambda g: classify_exception(g, max_n=None, max_m=None).kind == "G1",
        "iso-g2": lambda g: classify_exception(g, max_n=None, max_m=None).kind == "G2",
    }


PREDICATES = tuple(sorted(_predicates()))


def parse_predicate(text: str) -> list[tuple[bool, str]]:
    """Parse a conjunction of possibly negated predicate names into (negated, name) pairs."""
    literals = []
    for part in re.split(r"\s*(?:∧|&&?|\band\b)\s*", text.strip(), flags=re.IGNORECASE):
        lit = part.strip().lower()
        negated = False
        while True:
            m = re.match(r"^(?:¬|!|~|not\s+)\s*", lit)
            if not m:
                break
            negated = not negated
            lit = lit[m.end():]
        if lit not in _predicates():
            raise ValueError(f"unknown predicate {lit!r}; known: {', '.join(PREDICATES)}")
        literals.append((negated, lit))
    return literals


def _scan_chunk(args) -> list[tuple[int, int, str]]:
    literals, n, m, delta, first = args
    preds = _predicates()
    hits = []
    for g in enumerate_gnmd(n, m, delta, guard=False, first=first):
        if all(preds[name](g) != neg for neg, name in literals):
            hits.append((n, m, canonical_form(g, max_n=None, max_m=None).hex()))
    return hits


def scan(predicate: str, ns: Iterable[int], ms: Iterable[int], delta: int, *,
         workers: int = 1, guard: bool = True) -> list[BipartiteGraph]:
    """All canonical classes in the range satisfying ``predicate``, in deterministic order."""
    literals = parse_predicate(predicate)
    items = []
    for n in ns:
        for m in ms:
            _guard(n, m, guard)
            items.extend((literals, n, m, delta, c) for c in work_items(n))
    hits = sorted(h for part in _map(_scan_chunk, items, workers) for h in part)
    return [graph_from_canonical(bytes.fromhex(key)) for _, _, key in hits]


# -- structural audits ----------------------------------------------------------

AUDITS = ("neighbor", "neighbor3", "noncrossing-bound", "lemT", "separation")


def audit_graph(g: BipartiteGraph) -> dict[str, AuditReport]:
    """Run every tight-pair and crossing audit on one graph."""
    reports = {name: AuditReport(name) for name in AUDITS}
    cycles = longest_cycles(g)
    for c in cycles:
        reports["noncrossing-bound"].merge(audit_noncrossing_bound(g, c))
    for tp in tight_pairs(g, max_n=None):
        for name, r in audit_tight_pair(g, tp).items():
            reports[name].merge(r)
    return reports


def _audit_chunk(args) -> tuple[int, dict]:
    n, m, delta, first = args
    reports = {name: AuditReport(name) for name in AUDITS}
    count = 0
    for g in enumerate_gnmd(n, m, delta, guard=False, first=first):
        count += 1
        for name, r in audit_graph(g).items():
            reports[name].merge(r)
    return count, reports


def audit_sweep(n: int, ms: Iterable[int], delta: int, *, workers: int = 1) -> tuple[int, dict[str, AuditReport]]:
    """Audit every class of G(n, m, delta) for m in ``ms``; returns (graphs, reports)."""
    items = [(n, m, delta, c) for m in ms for c in work_items(n)]
    reports = {name: AuditReport(name) for name in AUDITS}
    graphs = 0
    for count, part in _map(_audit_chunk, items, workers):
        graphs += count
        for name, r in part.items():
            reports[name].merge(r)
    return graphs, reports
