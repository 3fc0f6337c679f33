#!/usr/bin/env python3
"""Sweep target failure probabilities and print the minimal training-set
size each one requires, for a fixed classifier family (h, p) and
divergence eps.

The default configuration reproduces the headline case: 16 hyperplanes in
a 3-dimensional space with eps = 0.05 need n ~ 1.03e6 samples to push the
divergence probability under 1%.
"""

import argparse
import math

from shatterbound.bounds import delta_bound, solve_min_n
from shatterbound.shattering import HypothesisSpec


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--h", type=int, default=3)
    ap.add_argument("--p", type=int, default=16)
    ap.add_argument("--eps", type=float, default=0.05)
    ap.add_argument(
        "--deltas", type=str, default="0.1,0.05,0.01,0.001",
        help="comma-separated target probabilities",
    )
    args = ap.parse_args()

    spec = HypothesisSpec(h=args.h, p=args.p)
    deltas = [float(d) for d in args.deltas.split(",")]
    print(f"family: h={spec.h} p={spec.p}   eps={args.eps}")
    print(f"{'delta':>10}  {'min n':>12}  {'log bound at n':>16}")
    for delta in deltas:
        n_star = solve_min_n(delta, args.eps, spec)
        at = delta_bound(n_star, args.eps, spec).log_value
        print(f"{delta:>10g}  {n_star:>12}  {at:>16.6f}  (target {math.log(delta):.6f})")


if __name__ == "__main__":
    main()
