#!/usr/bin/env python3
"""Look for 2-connected classes without a spanning-X cycle, box by box.

Prints the smallest witnesses found; useful for probing how tight the
m <= 3*delta - 5 bound is at small n.
"""

import argparse
import os

from bergecycle.io import to_text
from bergecycle.structure import classify_exception
from bergecycle.verify import scan


def main() -> int:
    p = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    p.add_argument("--n", type=int, nargs="+", default=[3, 4])
    p.add_argument("--delta", type=int, default=4)
    p.add_argument("--m", type=int, nargs="+", help="default: 3*delta-4")
    p.add_argument("--pred", default="2-connected and not spanning-x-cycle")
    p.add_argument("--show", type=int, default=3, help="graphs to print per box")
    p.add_argument("--workers", type=int, default=os.cpu_count() or 1)
    args = p.parse_args()
    ms = args.m or [3 * args.delta - 4]
    for n in args.n:
        for m in ms:
            hits = scan(args.pred, [n], [m], args.delta, workers=args.workers)
            print(f"n={n} m={m} delta={args.delta}: {len(hits)} classes")
            for g in hits[:args.show]:
                print(f"  [{classify_exception(g)}]")
                print("  " + to_text(g).replace("\n", "\n  ").rstrip())
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
