#!/usr/bin/env python3
"""Run the w-profile census over a grid of (d, max index) and print a table.

    python scripts/run_census.py --d 1 2 3 --max-index 1 2 3 --json census.json
"""
import argparse
import json
import time

from dforms.oracle import SUBSET_CAP, enumerate_monomials, theorem29_census


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--d", type=int, nargs="+", default=[1, 2, 3])
    ap.add_argument("--max-index", type=int, nargs="+", default=[1, 2, 3])
    ap.add_argument("--jobs", type=int, default=1)
    ap.add_argument("--json", help="also write the reports here")
    args = ap.parse_args()

    rows = []
    print(f"{'d':>2} {'M':>2} {'subsets':>9} {'ss':>6} {'bs':>6} {'prof':>5} {'equal':>6} {'sec':>6}")
    for d in args.d:
        for M in args.max_index:
            if 2 ** len(enumerate_monomials(d, M)) > SUBSET_CAP:
                print(f"{d:>2} {M:>2}  skipped (over the subset cap)")
                continue
            t0 = time.perf_counter()
            rep = theorem29_census(d, M, jobs=args.jobs)
            dt = time.perf_counter() - t0
            c = rep.counts
            print(f"{d:>2} {M:>2} {c['subsets']:>9} {c['strongly_stable_spaces']:>6} "
                  f"{c['block_stable_spaces']:>6} {c['osequences']:>5} {str(rep.sets_equal):>6} {dt:>6.2f}")
            rows.append(rep.to_json())
    if args.json:
        with open(args.json, "w") as fh:
            json.dump(rows, fh, indent=1, sort_keys=True)


if __name__ == "__main__":
    main()
