#!/usr/bin/env python3
"""Sweep tight-pair and crossing audits over whole classes G(n, m, delta)."""

from __future__ import annotations

import argparse
import json
import os
from dataclasses import dataclass

from bergecycle.verify import audit_sweep


@dataclass(frozen=True)
class AuditBox:
    n: int
    m_max: int
    delta: int


DEFAULT_BOXES = (AuditBox(3, 5, 3), AuditBox(4, 6, 3), AuditBox(4, 8, 4))


def parse_box(text: str) -> AuditBox:
    n, m_max, delta = (int(v) for v in text.split(","))
    return AuditBox(n, m_max, delta)


def main() -> int:
    p = argparse.ArgumentParser(description=__doc__)
    p.add_argument("--box", type=parse_box, action="append",
                   help="n,m_max,delta (repeatable); default sweeps three boxes")
    p.add_argument("--workers", type=int, default=os.cpu_count() or 1)
    p.add_argument("--json", action="store_true")
    args = p.parse_args()

    results, bad = [], 0
    for box in args.box or DEFAULT_BOXES:
        count, reports = audit_sweep(box.n, range(0, box.m_max + 1), box.delta, workers=args.workers)
        bad += sum(len(r.violations) for r in reports.values())
        results.append({"box": vars(box), "graphs": count,
                        "audits": {k: r.to_dict() for k, r in sorted(reports.items())}})
    if args.json:
        print(json.dumps(results, indent=2, sort_keys=True))
    else:
        for res in results:
            b = res["box"]
            print(f"G({b['n']}, m<={b['m_max']}, {b['delta']}): {res['graphs']} graphs")
            for name, r in res["audits"].items():
                print(f"  {name:18s} checked={r['checked']:6d} violations={r['violations']}")
    return 1 if bad else 0


if __name__ == "__main__":
    raise SystemExit(main())
