"""Closed-form extremal values as functions of the vertex count n.

Unit-perimeter problems (infimum / supremum over all n-gons of perimeter 1):

    s(n), S(n)   sum of pairwise distances
    t(n), T(n)   sum of pairwise squared distances

Unit-disk problems (supremum of the perimeter of n-gons inside the unit
disk): F(n) for simple polygons, G(n) without the simplicity requirement.
The ``*_c`` values are the same quantities restricted to convex polygons.
"""

from __future__ import annotations

import math
import operator
from dataclasses import asdict, dataclass

from polyextrema.errors import BadN


def _check_n(n, minimum=3, odd=False) -> int:
    if isinstance(n, bool):
        raise BadN(f"n must be an integer, got {n!r}")
    try:
        n = operator.index(n)
    except TypeError:
        raise BadN(f"n must be an integer, got {n!r}") from None
    if n < minimum:
        raise BadN(f"n must be >= {minimum}, got {n}")
    if odd and n % 2 == 0:
        raise BadN(f"n must be odd, got {n}")
    return n


def _floor_ceil_product(n: int) -> int:
    return (n // 2) * ((n + 1) // 2)


def s_bounds(n: int) -> tuple[float, float]:
    """Lower and upper bound on s(n); they coincide for even n."""
    n = _check_n(n)
    if n % 2 == 0:
        return n / 4, n / 4
    return n / 4, (n + 1) / 4


def S_max(n: int) -> float:
    n = _check_n(n)
    return 0.5 * _floor_ceil_product(n)


def t_bounds(n: int) -> tuple[float, float]:
    """The proven sandwich 1/8 <= t(n) <= 1/4.

    The upper value is a limit of constructions as n grows; small n can do
    worse (t(3) = 1/3).
    """
    n = _check_n(n)
    return 0.125, 0.25


def T_max(n: int) -> float:
    n = _check_n(n)
    return 0.25 * _floor_ceil_product(n)


def alternating_sum_squared(n: int) -> float:
    """Squared-distance sum of the normalized alternating collinear polygon."""
    n = _check_n(n)
    if n % 2 == 0:
        return 0.25
    return 0.25 * (n + 1) / (n - 1)


def a_of_n(n: int) -> float:
    n = _check_n(n)
    return math.sqrt(1 + 8 * (n - 2) ** 2)


def simple_perimeter_radical(n: int) -> float:
    """Maximum simple perimeter for odd n, written with nested radicals."""
    n = _check_n(n, odd=True)
    m = n - 2
    a = math.sqrt(1 + 8 * m * m)
    return math.sqrt(8 * m * m - 2 + 2 * a) * (a + 3) / (4 * m)


def simple_perimeter_factored(n: int) -> float:
    """Same value as :func:`simple_perimeter_radical`, written through a = a(n)."""
    n = _check_n(n, odd=True)
    a = a_of_n(n)
    return math.sqrt((a + 1) ** 2 - 4) * (a + 3) / (4 * (n - 2))


def F_max(n: int) -> float:
    """Supremum of the perimeter of a simple n-gon in the unit disk.

    Even n: the trivial value 2n, approached but never attained.
    """
    n = _check_n(n)
    if n % 2 == 0:
        return 2.0 * n
    if n == 3:
        return 3 * math.sqrt(3)
    return simple_perimeter_radical(n)


def F_lower_bound_check(n: int) -> tuple[float, float]:
    """(F(n), 2(n-2) + 3*sqrt(2)/2); the first is never below the second."""
    n = _check_n(n, minimum=5, odd=True)
    return simple_perimeter_radical(n), 2 * (n - 2) + 1.5 * math.sqrt(2)


def G_max(n: int) -> float:
    """Maximum perimeter of an n-gon in the unit disk, simplicity not required."""
    n = _check_n(n)
    if n % 2 == 0:
        return 2.0 * n
    return 2 * n * math.cos(math.pi / (2 * n))


def F_asymptotic(n: int) -> float:
    """Leading terms 2(n-2) + 2*sqrt(2); the remainder is O(1/n)."""
    n = _check_n(n, minimum=5, odd=True)
    return 2 * (n - 2) + 2 * math.sqrt(2)


def G_asymptotic_gap(n: int) -> float:
    """2n - G(n), which behaves like pi^2 / (4n)."""
    n = _check_n(n, odd=True)
    return 2 * n - G_max(n)


def convex_bounds(n: int) -> tuple[float, float, float, float, float]:
    """(s_c, S_c, lower bound on t_c, upper bound on t_c, T_c)."""
    n = _check_n(n)
    p = _floor_ceil_product(n)
    return (n - 1) / 2, 0.5 * p, 2 * n / (3 * math.pi ** 2), n / 8, 0.25 * p


@dataclass(frozen=True)
class BoundSet:
    n: int
    s_lower: float
    s_upper: float
    S: float
    t_lower: float
    t_upper: float
    T: float
    F: float
    G: float
    s_c: float
    S_c: float
    t_c_lower: float
    t_c_upper: float
    T_c: float
    # F is only attained for n = 3 (the equilateral triangle); for odd n >= 5
    # the extremal polygon has overlapping edges, for even n it is a zigzag limit.
    F_attained: bool
    # G is attained by the star thrackle (odd n) and by the doubled diameter (even n).
    G_attained: bool

    def to_dict(self) -> dict:
        return asdict(self)


def bound_set(n: int) -> BoundSet:
    n = _check_n(n)
    s_lo, s_hi = s_bounds(n)
    t_lo, t_hi = t_bounds(n)
    s_c, S_c, tc_lo, tc_hi, T_c = convex_bounds(n)
    return BoundSet(
        n=n,
        s_lower=s_lo,
        s_upper=s_hi,
        S=S_max(n),
        t_lower=t_lo,
        t_upper=t_hi,
        T=T_max(n),
        F=F_max(n),
        G=G_max(n),
        s_c=s_c,
        S_c=S_c,
        t_c_lower=tc_lo,
        t_c_upper=tc_hi,
        T_c=T_c,
        F_attained=(n == 3),
        G_attained=True,
    )
