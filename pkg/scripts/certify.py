"""Run the restart optimizer on every catalog problem and compare with the closed forms."""

import argparse
import time

from polyextrema import bounds
from polyextrema.io import write_json
from polyextrema.optimize import CATALOG, optimize

TARGETS = {"S": bounds.S_max, "T": bounds.T_max, "F": bounds.F_max, "G": bounds.G_max}


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--n", type=int, nargs="+", default=list(range(4, 10)))
    ap.add_argument("--problems", nargs="+", default=list(TARGETS), choices=list(CATALOG))
    ap.add_argument("--seed", type=int, default=42)
    ap.add_argument("--restarts", type=int, default=200)
    ap.add_argument("--workers", type=int, default=1)
    ap.add_argument("--json", default=None)
    args = ap.parse_args()
    rows = []
    for name in args.problems:
        objective, constraints = CATALOG[name]
        for n in args.n:
            t0 = time.perf_counter()
            run = optimize(objective, constraints, n, seed=args.seed, restarts=args.restarts, workers=args.workers)
            target = TARGETS[name](n) if name in TARGETS else None
            rel = abs(run.best_value - target) / target if target else None
            rows.append({"problem": name, "n": n, "best": run.best_value, "target": target, "rel_err": rel,
                         "best_restart": run.best_restart, "seconds": time.perf_counter() - t0})
            tgt = f"{target:.12g}" if target is not None else "open"
            err = f"{rel:.2e}" if rel is not None else "-"
            print(f"{name} n={n:<3d} best={run.best_value:.12g} target={tgt} rel={err} "
                  f"restart={run.best_restart} {rows[-1]['seconds']:.2f}s")
    if args.json:
        write_json(rows, args.json)


if __name__ == "__main__":
    main()
