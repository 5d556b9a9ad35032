"""Write SVG figures of the extremal constructions into a directory."""

import argparse
from pathlib import Path

from polyextrema import constructions as c
from polyextrema import geometry as g
from polyextrema.svg import RenderOptions, write_svg


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--out", default="figures")
    args = ap.parse_args()
    out = Path(args.out)
    out.mkdir(parents=True, exist_ok=True)
    disk = RenderOptions(unit_circle=True)
    figs = {
        "star_thrackle_5.svg": (c.star_thrackle(5, 1.0), disk),
        "star_thrackle_9.svg": (c.star_thrackle(9, 1.0), disk),
        "simple_extremal_F_7.svg": (c.simple_extremal_F(7, 0.05), disk),
        "near_diameter_zigzag_6.svg": (c.near_diameter_zigzag(6, 0.05), disk),
        "two_cluster_7.svg": (g.normalize_to_unit_perimeter(c.two_cluster(7, 3, 0.02)), RenderOptions()),
        "alternating_collinear_6.svg": (c.alternating_collinear(6, 0.05), RenderOptions()),
    }
    for name, (p, opts) in figs.items():
        write_svg(p, out / name, opts)
        print(out / name)


if __name__ == "__main__":
    main()
