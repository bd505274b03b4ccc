#!/usr/bin/env python3
"""Scan all linear Betti rows with bounded beta_0 and count the feasible ones.

For fixed (n, d) a feasible row is determined by its m-sequence, so we walk
m-sequences (m_1 = 1, later entries within class sizes) and tally which
obstruction rejects each.  Useful for eyeballing how sharp the Macaulay
growth condition is compared with the naive class-size bound.
"""
import argparse
import itertools
from collections import Counter

from dforms.betti import betti_from_m, feasible_linear
from dforms.macaulay import class_size


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--n", type=int, default=4)
    ap.add_argument("--d", type=int, default=3)
    ap.add_argument("--max-beta0", type=int, default=40)
    args = ap.parse_args()

    n, d = args.n, args.d
    tally = Counter()
    examples = {}
    ranges = [range(min(class_size(d, i), args.max_beta0) + 1) for i in range(1, n)]
    for tail in itertools.product(*ranges):
        m = [1, *tail, 0]
        row = betti_from_m(m, d)
        if row.row[0] > args.max_beta0:
            continue
        v = feasible_linear(row)
        if v:
            key = "feasible"
        else:
            key = f"fails at m{v.index}" if v.index is not None else v.violation
        tally[key] += 1
        examples.setdefault(key, row.row)
    for key, count in tally.most_common():
        print(f"{count:>7}  {key:<24} e.g. row {examples[key]}")


if __name__ == "__main__":
    main()
