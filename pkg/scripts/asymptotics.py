"""Remainders of the asymptotic forms of F(n) and G(n).

n * (F(n) - 2(n-2) - 2 sqrt 2) tends to 1/2, and 4n (2n - G(n)) / pi^2 tends to 1.
"""

import argparse
import math

from polyextrema import bounds


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--n", type=int, nargs="+", default=[5, 11, 101, 1001, 10001, 100001])
    args = ap.parse_args()
    print("n          F(n)                n*(F - asym)     4n*(2n - G)/pi^2")
    for n in args.n:
        if n % 2 == 0:
            continue
        F = bounds.F_max(n)
        r = n * (F - bounds.F_asymptotic(n))
        q = 4 * n * bounds.G_asymptotic_gap(n) / math.pi ** 2
        print(f"{n:<10d} {F:<19.12f} {r:<16.10f} {q:.10f}")


if __name__ == "__main__":
    main()
