#!/usr/bin/env python3
"""Compare the two duals on every strongly stable ideal generated in one degree."""
import argparse
import time

from dforms.duality import duality_agree, murai_dual
from dforms.oracle import strongly_stable_ideals


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--max-n", type=int, default=4)
    ap.add_argument("--max-d", type=int, default=3)
    ap.add_argument("--show", action="store_true", help="print each ideal with its dual")
    args = ap.parse_args()

    for n in range(1, args.max_n + 1):
        for d in range(1, args.max_d + 1):
            t0 = time.perf_counter()
            ideals = list(strongly_stable_ideals(n, d))
            bad = [I for I in ideals if not duality_agree(I)]
            print(f"n={n} d={d}: {len(ideals):>4} ideals, {len(bad)} disagreements "
                  f"({time.perf_counter() - t0:.2f} s)")
            if args.show:
                for I in ideals:
                    print(f"    {I}  ->  {murai_dual(I)}")


if __name__ == "__main__":
    main()
