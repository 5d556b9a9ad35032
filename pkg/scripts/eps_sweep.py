"""Gap to the target bound as epsilon shrinks, for every degenerate-limit construction.

Prints gap(eps) and gap(eps) / gap(eps/2); first-order families show ratios near 2.
"""

import argparse

from polyextrema import bounds, constructions as c, geometry as g

unit = g.normalize_to_unit_perimeter

FAMILIES = {
    "two_cluster/S": (lambda n, e: g.sum_pairwise_distances(unit(c.two_cluster(n, n // 2, e))), bounds.S_max),
    "two_cluster/T": (lambda n, e: g.sum_pairwise_squared_distances(unit(c.two_cluster(n, n // 2, e))), bounds.T_max),
    "alternating/s": (lambda n, e: g.sum_pairwise_distances(unit(c.alternating_collinear(n, e))),
                      lambda n: bounds.s_bounds(n)[1]),
    "simple_extremal_F": (lambda n, e: g.perimeter(c.simple_extremal_F(n, e)), bounds.F_max),
    "near_diameter_zigzag": (lambda n, e: g.perimeter(c.near_diameter_zigzag(n, e)), lambda n: 2.0 * n),
}


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--n", type=int, nargs="+", default=[4, 5, 8, 9])
    ap.add_argument("--kmax", type=int, default=8, help="sweep eps = 1e-2 .. 1e-kmax")
    args = ap.parse_args()
    for name, (value, target) in FAMILIES.items():
        for n in args.n:
            if name == "simple_extremal_F" and n % 2 == 0 or name == "near_diameter_zigzag" and n % 2 == 1:
                continue
            print(f"{name}  n={n}  target={target(n):.12g}")
            for k in range(2, args.kmax + 1):
                e = 10.0 ** -k
                gap = abs(target(n) - value(n, e))
                half = abs(target(n) - value(n, e / 2))
                print(f"  eps=1e-{k:<2d} gap={gap:.4e}  gap/gap(eps/2)={gap / half if half else float('inf'):.4f}"
                      f"  gap/eps={gap / e:.4f}")


if __name__ == "__main__":
    main()
