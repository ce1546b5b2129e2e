#!/usr/bin/env python3
"""Run the theorem boxes and write one JSON report per box.

    python scripts/verify_boxes.py --out results/verify --workers 4
"""

from __future__ import annotations

import argparse
import json
import logging
import os
from dataclasses import dataclass, field
from pathlib import Path

from bergecycle.verify import ParameterBox, verify_theorem


@dataclass
class SweepConfig:
    out: Path = Path("results/verify")
    workers: int = os.cpu_count() or 1
    boxes: list[tuple[str, int, int, int]] = field(default_factory=lambda: [
        ("jackson", 2, 4, 3), ("jackson", 3, 4, 3),
        ("jackson2", 2, 5, 3), ("jackson2", 3, 5, 3), ("jackson2", 4, 7, 4),
        *[("mainj", n, m, 4) for n in (3, 4) for m in range(4, 8)],
        *[("mainpan", 3, m, 4) for m in range(4, 8)],
        ("mainj2", 3, 7, 4), ("mainj2", 4, 7, 4),
        ("jackson22", 3, 5, 3), ("jackson22", 4, 7, 4),
    ])


def run(cfg: SweepConfig) -> int:
    cfg.out.mkdir(parents=True, exist_ok=True)
    failures = 0
    rows = []
    for theorem, n, m, delta in cfg.boxes:
        report = verify_theorem(ParameterBox(theorem, n, m, delta), workers=cfg.workers)
        name = f"{theorem}_n{n}_m{m}_d{delta}.json"
        (cfg.out / name).write_text(json.dumps(report.to_dict(), sort_keys=True, indent=2) + "\n")
        labels = sorted({e.get("classification", "?") for e in report.exceptions})
        rows.append(f"{theorem:10s} n={n} m={m} delta={delta}  classes={report.total:6d}  "
                    f"hyp={report.hypothesis:6d}  exc={len(report.exceptions):3d}  "
                    f"{'ok ' if report.ok else 'BAD'} {' '.join(labels)}  {report.wall_time:.2f}s")
        failures += not report.ok
    print("\n".join(rows))
    return 1 if failures else 0


def main() -> int:
    p = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    p.add_argument("--out", type=Path, default=SweepConfig.out)
    p.add_argument("--workers", type=int, default=SweepConfig.workers)
    p.add_argument("-v", "--verbose", action="store_true")
    args = p.parse_args()
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING)
    return run(SweepConfig(out=args.out, workers=args.workers))


if __name__ == "__main__":
    raise SystemExit(main())
