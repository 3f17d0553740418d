"""Scan registry identities over a range and summarize outcomes per identity."""

import argparse
import time
from collections import defaultdict

from legdet.registry import moduli, scan, select


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--id", action="append", default=None, help="glob, repeatable (default: all)")
    ap.add_argument("--max", type=int, default=199)
    ap.add_argument("--odd", action="store_true", help="all odd moduli instead of primes")
    ap.add_argument("--engine", default="auto")
    ap.add_argument("--jobs", type=int, default=1)
    args = ap.parse_args()

    t0 = time.perf_counter()
    reports = scan(select(args.id or ["*"]), moduli(3, args.max, not args.odd), args.engine, args.jobs)
    by_id = defaultdict(list)
    for r in reports:
        by_id[r.id].append(r)
    bad = 0
    for ident_id, rs in by_id.items():
        miss = [r.modulus for r in rs if r.outcome != "match"]
        bad += len(miss)
        print(f"{ident_id:<18} {len(rs):>4} moduli  {'all match' if not miss else f'MISMATCH at {miss}'}")
    print(f"{len(reports)} reports, {bad} not matching, {time.perf_counter() - t0:.1f}s")
    raise SystemExit(1 if bad else 0)


if __name__ == "__main__":
    main()
