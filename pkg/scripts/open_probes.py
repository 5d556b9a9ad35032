"""Numerical probes of the values left open: s(n) for odd n and t(n).

The probes are best values found, i.e. upper estimates of the infima; the
script compares them with the known constructions and the proven sandwiches.
"""

import argparse
import math

from polyextrema import bounds
from polyextrema.optimize import optimize_catalog


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--n", type=int, nargs="+", default=list(range(3, 12)))
    ap.add_argument("--seed", type=int, default=42)
    ap.add_argument("--restarts", type=int, default=200)
    args = ap.parse_args()
    print("n   s probe          s sandwich       t probe          thrackle t        alternating t")
    for n in args.n:
        s = optimize_catalog("s", n, seed=args.seed, restarts=args.restarts).best_value
        t = optimize_catalog("t", n, seed=args.seed, restarts=args.restarts).best_value
        lo, hi = bounds.s_bounds(n)
        thr = 0.25 / math.cos(math.pi / (2 * n)) ** 2 if n % 2 else float("nan")
        print(f"{n:<3d} {s:.12f}   [{lo:.4g}, {hi:.4g}]   {t:.12f}   {thr:.12f}   "
              f"{bounds.alternating_sum_squared(n):.12f}")


if __name__ == "__main__":
    main()
