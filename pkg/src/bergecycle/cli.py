"""Command-line front end: ``gen``, ``check``, ``verify`` and ``scan``.

Exit status: 0 when the computation finished (whatever the boolean answer),
1 when ``verify`` found an exception the theorem forbids, 2 on usage, parse
or guard errors.
"""

from __future__ import annotations

import argparse
import json
import os
import random
import sys
from pathlib import Path

from . import io
from .canonical import TooLargeError
from .constructions import ConstructionSpec, certify
from .cycles import (find_berge_cycle_with_edges, find_cycle_covering_exactly,
                     first_non_pancyclic_base, first_non_pancyclic_subset, longest_cycle)
from .model import (BergeCycleWitness, BipartiteGraph, CycleWitness, GraphError, Hypergraph,
                    hypergraph_of, incidence_graph)
from .structure import (are_crossing, check_condition_lll_for, cut_vertices, find_tight_pair,
                        first_lll_failure, is_2connected)
from .verify import BoxError, ParameterBox, scan, verify_theorem

PROPERTIES = ("2connected", "lll", "longest-cycle", "spanning-x-cycle", "super-pancyclic",
              "tight-pair", "crossing", "hamiltonian-berge", "berge-with-edges", "codegree")


class UsageError(Exception):
    pass


def _int_list(text: str) -> list[int]:
    try:
        return [int(t) for t in text.replace(",", " ").split()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma separated integers, got {text!r}")


def _int_range(text: str) -> list[int]:
    """``5`` or ``4..7`` (inclusive)."""
    try:
        if ".." in text:
            lo, hi = text.split("..", 1)
            return list(range(int(lo), int(hi) + 1))
        return [int(text)]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected an integer or a range a..b, got {text!r}")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="bergecycle", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    fmt = argparse.ArgumentParser(add_help=False)
    fmt.add_argument("--format", choices=("text", "json"), default="text")
    fmt.add_argument("--json", action="store_true", help="shorthand for --format json")

    gen = sub.add_parser("gen", parents=[fmt], help="generate a construction or a random graph")
    gen.add_argument("family", choices=("g1", "g2", "g3", "h3", "h4", "random"))
    for name in ("delta", "a", "b", "n1", "n2", "n3", "n", "m"):
        gen.add_argument(f"--{name}", type=int)
    gen.add_argument("--density", type=float, default=0.5)
    gen.add_argument("--seed", type=int, default=0)
    gen.add_argument("-o", "--out")

    check = sub.add_parser("check", parents=[fmt], help="compute a property of a graph file")
    check.add_argument("--in", dest="infile", required=True)
    check.add_argument("--prop", choices=PROPERTIES)
    check.add_argument("--i", type=int)
    check.add_argument("--j", type=int)
    check.add_argument("--edges", type=_int_list)
    check.add_argument("--set", dest="vset", type=_int_list)
    check.add_argument("--subset", type=_int_list, help="X-subset for lll / spanning checks")
    check.add_argument("--witness", help="JSON witness file to re-validate against the input")
    check.add_argument("-o", "--out")

    ver = sub.add_parser("verify", parents=[fmt], help="exhaustively verify a theorem on a box")
    ver.add_argument("theorem")
    ver.add_argument("--n", type=int, required=True)
    ver.add_argument("--m", type=int, required=True)
    ver.add_argument("--delta", type=int, required=True)
    ver.add_argument("--workers", type=int, default=os.cpu_count() or 1)
    ver.add_argument("--mode", choices=("canonical", "exhaustive-labeled"), default="canonical")
    ver.add_argument("--guard-override", action="store_true")
    ver.add_argument("--timing", action="store_true", help="include wall time in the report")
    ver.add_argument("--dump-exceptions", metavar="DIR")
    ver.add_argument("-o", "--out")

    sc = sub.add_parser("scan", parents=[fmt], help="list classes satisfying a predicate")
    sc.add_argument("--pred", required=True)
    sc.add_argument("--n", type=_int_range, required=True)
    sc.add_argument("--m", type=_int_range, required=True)
    sc.add_argument("--delta", type=int, required=True)
    sc.add_argument("--workers", type=int, default=os.cpu_count() or 1)
    sc.add_argument("--guard-override", action="store_true")
    sc.add_argument("-o", "--out")
    return parser


def _emit(text: str, out: str | None) -> None:
    if out:
        Path(out).write_text(text)
    else:
        sys.stdout.write(text)


def _need(args, *names):
    missing = [n for n in names if getattr(args, n) is None]
    if missing:
        raise UsageError(f"{args.family} needs " + ", ".join("--" + n for n in missing))
    return [getattr(args, n) for n in names]


def cmd_gen(args, fmt: str) -> int:
    if args.family == "random":
        n, m = _need(args, "n", "m")
        rng = random.Random(args.seed)
        rows = [[y for y in range(m) if rng.random() < args.density] for _ in range(n)]
        _emit(io.serialize(BipartiteGraph.from_neighbourhoods(m, rows), fmt), args.out)
        return 0
    names = {"g1": ("delta",), "g2": ("a", "b", "delta"), "g3": ("n1", "n2", "n3", "delta"),
             "h3": ("n",), "h4": ("n",)}[args.family]
    spec = ConstructionSpec(args.family.upper(), dict(zip(names, _need(args, *names))))
    obj = spec.build()
    cert = certify(spec)
    _emit(io.serialize(obj, fmt), args.out)
    info = json.dumps(cert.to_dict(), sort_keys=True) if fmt == "json" else cert.summary()
    print(info, file=sys.stdout if args.out else sys.stderr)
    return 0


def _cycle_dict(w):
    return None if w is None else w.to_dict()


def _load_witness(path: str) -> dict:
    data = json.loads(Path(path).read_text())
    return data.get("witness", data) if isinstance(data, dict) else data


def _check_witness(obj, g: BipartiteGraph, data: dict) -> dict:
    if data is None:
        raise UsageError("witness file holds no witness")
    if "xs" in data:
        CycleWitness(data["xs"], data["ys"], graph=g)
        return {"prop": "witness", "value": True, "kind": "cycle"}
    if "base" in data:
        h = obj if isinstance(obj, Hypergraph) else hypergraph_of(g)
        BergeCycleWitness(data["base"], data["edges"], hypergraph=h)
        return {"prop": "witness", "value": True, "kind": "berge-cycle"}
    if "cycle" in data:
        return _check_witness(obj, g, data["cycle"])
    raise UsageError("witness file holds no xs/ys or base/edges")


def compute_property(obj, args) -> dict:
    g = incidence_graph(obj) if isinstance(obj, Hypergraph) else obj
    h = obj if isinstance(obj, Hypergraph) else None
    prop = args.prop
    if prop == "2connected":
        value = is_2connected(g)
        return {"prop": prop, "value": value, "cut_vertices": cut_vertices(g)}
    if prop == "lll":
        if args.subset:
            b = check_condition_lll_for(g, args.subset)
            return {"prop": prop, "A": sorted(set(args.subset)), "value": b is not None,
                    "certificate": None if b is None else list(b)}
        failing = first_lll_failure(g)
        return {"prop": prop, "value": failing is None,
                "failing_A": None if failing is None else list(failing)}
    if prop == "longest-cycle":
        w = longest_cycle(g)
        return {"prop": prop, "value": 0 if w is None else len(w), "witness": _cycle_dict(w)}
    if prop == "spanning-x-cycle":
        xs = args.subset if args.subset else list(range(g.n))
        w = find_cycle_covering_exactly(g, xs) if len(xs) >= 2 else None
        return {"prop": prop, "value": w is not None, "witness": _cycle_dict(w)}
    if prop == "super-pancyclic":
        failing = first_non_pancyclic_base(h) if h else first_non_pancyclic_subset(g)
        return {"prop": prop, "value": failing is None,
                "failing_subset": None if failing is None else list(failing)}
    if prop == "tight-pair":
        tp = find_tight_pair(g)
        if tp is None:
            return {"prop": prop, "value": None}
        return {"prop": prop, "value": tp.t, "witness": {"cycle": tp.cycle.to_dict(), "x": tp.x}}
    if prop == "crossing":
        if args.i is None or args.j is None:
            raise UsageError("crossing needs --i and --j")
        if args.witness:
            data = _load_witness(args.witness)
            cycle = CycleWitness(data["xs"], data["ys"], graph=g)
        else:
            cycle = longest_cycle(g)
            if cycle is None:
                raise UsageError("graph has no cycle to evaluate crossing on")
        q = are_crossing(g, cycle, args.i, args.j)
        return {"prop": prop, "value": q.crossing, "cycle": cycle.to_dict(),
                "i": q.i, "j": q.j, "witness_indices": None if q.witness is None else list(q.witness)}
    if h is None:
        h = hypergraph_of(g)
    if prop == "hamiltonian-berge":
        from .cycles import find_berge_cycle
        if h.n < 3:
            raise UsageError("hamiltonian-berge needs at least 3 vertices")
        w = find_berge_cycle(h, range(h.n))
        return {"prop": prop, "value": w is not None, "witness": _cycle_dict(w)}
    if prop == "berge-with-edges":
        if not args.edges:
            raise UsageError("berge-with-edges needs --edges")
        w = find_berge_cycle_with_edges(h, args.edges)
        return {"prop": prop, "value": w is not None, "witness": _cycle_dict(w)}
    if prop == "codegree":
        if not args.vset:
            raise UsageError("codegree needs --set")
        return {"prop": prop, "set": args.vset, "value": h.codegree(args.vset)}
    raise UsageError(f"unknown property {prop!r}")


def _human(result: dict) -> str:
    prop, value = result["prop"], result["value"]
    if prop == "longest-cycle":
        head = "no cycle" if not value else f"ℓ={value} (length {2 * value})"
    elif prop == "tight-pair":
        head = "none" if value is None else f"t={value}"
    else:
        head = str(value).lower() if isinstance(value, bool) else str(value)
    lines = [f"{prop}: {head}"]
    for key, val in result.items():
        if key not in ("prop", "value") and val not in (None, []):
            lines.append(f"  {key}: {json.dumps(val, sort_keys=True)}")
    return "\n".join(lines) + "\n"


def cmd_check(args, fmt: str) -> int:
    obj = io.read_file(args.infile)
    g = incidence_graph(obj) if isinstance(obj, Hypergraph) else obj
    if args.witness and args.prop != "crossing":
        result = _check_witness(obj, g, _load_witness(args.witness))
    elif args.prop is None:
        raise UsageError("check needs --prop or --witness")
    else:
        result = compute_property(obj, args)
    text = json.dumps(result, sort_keys=True) + "\n" if fmt == "json" else _human(result)
    _emit(text, args.out)
    return 0


def cmd_verify(args, fmt: str) -> int:
    box = ParameterBox(args.theorem, args.n, args.m, args.delta)
    report = verify_theorem(box, workers=args.workers, mode=args.mode,
                            guard=not args.guard_override)
    payload = json.dumps(report.to_dict(timing=args.timing), sort_keys=True, indent=2) + "\n"
    if args.out:
        Path(args.out).write_text(payload)
    if fmt == "json" and not args.out:
        sys.stdout.write(payload)
    else:
        print(report.table())
        if args.timing:
            print(f"  wall time               {report.wall_time:.2f}s")
    if args.dump_exceptions:
        outdir = Path(args.dump_exceptions)
        outdir.mkdir(parents=True, exist_ok=True)
        for k, e in enumerate(report.exceptions):
            (outdir / f"exception_{k:03d}.bg").write_text(io.serialize(io.from_dict(e["graph"])))
    return 0 if report.ok else 1


def cmd_scan(args, fmt: str) -> int:
    graphs = scan(args.pred, args.n, args.m, args.delta, workers=args.workers,
                  guard=not args.guard_override)
    if fmt == "json":
        text = json.dumps([io.to_dict(g) for g in graphs], sort_keys=True) + "\n"
    else:
        text = f"# {len(graphs)} classes satisfy {args.pred!r}\n" + "".join(io.to_text(g) for g in graphs)
    _emit(text, args.out)
    return 0


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    fmt = "json" if args.json else args.format
    handler = {"gen": cmd_gen, "check": cmd_check, "verify": cmd_verify, "scan": cmd_scan}[args.command]
    try:
        return handler(args, fmt)
    except io.ParseError as exc:
        print(f"parse error: {exc}", file=sys.stderr)
    except TooLargeError as exc:
        print(f"guard exceeded: {exc}", file=sys.stderr)
    except BoxError as exc:
        print(f"error: {exc}", file=sys.stderr)
    except (UsageError, GraphError, ValueError) as exc:
        print(f"usage error: {exc}", file=sys.stderr)
    except OSError as exc:
        print(f"cannot access file: {exc}", file=sys.stderr)
    return 2


if __name__ == "__main__":
    sys.exit(main())
