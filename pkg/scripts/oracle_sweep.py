#!/usr/bin/env python3
"""Exhaustively cross-check the counting formula against the geometric
oracle over a grid of (n, h), several random point sets each.

Every cell enumerates all 2^n labelings of a fresh general-position sample
and decides each one with the exact-rational LP, so a PASS row means the
formula value was reproduced by brute force, not approximated.
"""

import argparse
import time

from shatterbound.oracle import verify_formula


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--n-max", type=int, default=10)
    ap.add_argument("--h-max", type=int, default=3)
    ap.add_argument("--trials", type=int, default=3)
    ap.add_argument("--seed", type=int, default=0)
    ap.add_argument("--workers", type=int, default=1)
    args = ap.parse_args()

    failures = 0
    print(f"{'n':>3} {'h':>3} {'formula':>9}  {'oracle counts':<22} {'sec':>6}  verdict")
    for n in range(2, args.n_max + 1):
        for h in range(1, args.h_max + 1):
            t0 = time.monotonic()
            rep = verify_formula(n, h, args.trials, args.seed, workers=args.workers)
            dt = time.monotonic() - t0
            counts = " ".join(str(t.count) for t in rep.results)
            verdict = "PASS" if rep.passed else "FAIL"
            failures += 0 if rep.passed else 1
            print(f"{n:>3} {h:>3} {rep.formula_count:>9}  {counts:<22} {dt:>6.2f}  {verdict}")
    if failures:
        raise SystemExit(f"{failures} grid cells disagreed with the formula")
    print("all cells PASS")


if __name__ == "__main__":
    main()
