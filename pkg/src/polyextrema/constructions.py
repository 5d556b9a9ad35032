"""Extremal and near-extremal polygons.

Most extremal values are only approached in degenerate limits (vertex
clusters, edges traversed several times). Every such family here takes an
explicit separation ``epsilon`` so that the limit object becomes a concrete,
non-degenerate polygon whose gap to the bound shrinks linearly in epsilon.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass

import numpy as np

from polyextrema.errors import BadEpsilon, BadN, BadRadius, BadSplit
from polyextrema.geometry import Polygon


class Kind(str, enum.Enum):
    TWO_CLUSTER = "two_cluster"
    ALTERNATING_COLLINEAR = "alternating_collinear"
    STAR_THRACKLE = "star_thrackle"
    SIMPLE_EXTREMAL_F = "simple_extremal_f"
    NEAR_DIAMETER_ZIGZAG = "near_diameter_zigzag"


def _check_epsilon(epsilon, allow_zero=False):
    if not math.isfinite(epsilon) or epsilon < 0 or (epsilon == 0 and not allow_zero):
        raise BadEpsilon(f"epsilon must be {'>=' if allow_zero else '>'} 0, got {epsilon}")


def _check_n(n, minimum=3):
    if isinstance(n, bool) or int(n) != n or n < minimum:
        raise BadN(f"n must be an integer >= {minimum}, got {n!r}")
    return int(n)


def two_cluster(n: int, k: int, epsilon: float) -> Polygon:
    """k vertices on a tiny arc through (0, 0), n - k on a tiny arc through (1/2, 0).

    Both arcs have radius ``epsilon``, bow away from each other and span an
    angle of 1/n, so the polygon is in convex position and each cluster has
    diameter about epsilon / n. Not normalized.
    """
    n = _check_n(n)
    if isinstance(k, bool) or int(k) != k or not 1 <= k <= n - 1:
        raise BadSplit(f"cluster split k must satisfy 1 <= k <= n - 1, got {k!r}")
    _check_epsilon(epsilon)
    k = int(k)
    span = 1.0 / n

    def angles(m):
        if m == 1:
            return [0.0]
        return [span * (0.5 - j / (m - 1)) for j in range(m)]

    # left arc centred at (eps, 0), walked top to bottom
    left = [(epsilon - epsilon * math.cos(a), epsilon * math.sin(a)) for a in angles(k)]
    # right arc centred at (1/2 - eps, 0), walked bottom to top
    right = [(0.5 - epsilon + epsilon * math.cos(a), -epsilon * math.sin(a)) for a in angles(n - k)]
    return Polygon(left + right)


def alternating_collinear(n: int, epsilon: float = 0.0) -> Polygon:
    """Odd-index vertices near (0, 0), even-index vertices near (L, 0).

    L = 1/n for even n and 1/(n - 1) for odd n, so at epsilon = 0 the
    perimeter is exactly 1. For epsilon > 0 vertex A_i is lifted to height
    epsilon * i / n, which separates all coincident vertices.
    """
    n = _check_n(n)
    _check_epsilon(epsilon, allow_zero=True)
    length = 1.0 / n if n % 2 == 0 else 1.0 / (n - 1)
    pts = []
    for i in range(1, n + 1):
        x = 0.0 if i % 2 == 1 else length
        pts.append((x, epsilon * i / n))
    return Polygon(pts)


def star_thrackle(n: int, radius: float = 1.0) -> Polygon:
    """n evenly spaced circle points joined i -> i + (n - 1)/2 (odd n).

    Every edge has length 2 r cos(pi / 2n); every pair of non-adjacent edges
    crosses.
    """
    n = _check_n(n)
    if n % 2 == 0:
        raise BadN(f"the star thrackle needs odd n, got {n}")
    if not (math.isfinite(radius) and radius > 0):
        raise BadRadius(f"radius must be > 0, got {radius}")
    step = (n - 1) // 2
    pts = []
    for k in range(n):
        j = (k * step) % n
        theta = math.pi / 2 - 2 * math.pi * j / n  # clockwise labels
        pts.append((radius * math.cos(theta), radius * math.sin(theta)))
    return Polygon(pts)


def unit_perimeter_thrackle_radius(n: int) -> float:
    return 1.0 / (2 * n * math.cos(math.pi / (2 * n)))


def duplicated_star_thrackle(n: int, epsilon: float, radius: float | None = None) -> Polygon:
    """Even-n variant: the (n - 1)-point thrackle with A_1 repeated, pulled inward by epsilon * r."""
    n = _check_n(n, minimum=4)
    if n % 2 == 1:
        raise BadN(f"the duplicated thrackle needs even n, got {n}")
    _check_epsilon(epsilon)
    r = unit_perimeter_thrackle_radius(n - 1) if radius is None else radius
    base = star_thrackle(n - 1, r).vertices
    extra = base[0] * (1.0 - epsilon)
    return Polygon(np.vstack([base[:1], extra[None, :], base[1:]]))


def cap_half_angle(n: int) -> float:
    """Half the central angle alpha of the long chord of the extremal simple n-gon.

    Closed form of the critical point: sin(alpha/2) = (-1 + sqrt(1 + 8 m^2)) / (4 m), m = n - 2.
    """
    m = n - 2
    x = (-1.0 + math.sqrt(1 + 8 * m * m)) / (4 * m)
    return 2 * math.asin(x)


def simple_extremal_F(n: int, epsilon: float) -> Polygon:
    """Simple n-gon in the unit disk whose perimeter tends to F(n) as epsilon -> 0 (odd n).

    A_1 A_3 is a horizontal chord of length 2 sin(alpha) below the center and
    A_2 = (0, 1) sits above its midpoint. The remaining n - 2 edges run from
    A_3 back and forth near the chord and end at A_1; their turning vertices
    climb monotonically through a band of height epsilon, so no two of them
    cross. Turning points on the right are pulled inside the triangle
    A_1 A_2 A_3, and A_1 itself is raised to the top of the band.
    """
    n = _check_n(n)
    if n % 2 == 0:
        raise BadN(f"simple_extremal_F needs odd n, got {n}")
    _check_epsilon(epsilon)
    alpha = cap_half_angle(n)
    half = math.sin(alpha)
    y0 = -math.cos(alpha)
    a2 = (0.0, 1.0)
    a3 = (half, y0)
    if n == 3:
        return Polygon([(-half, y0), a2, a3])
    layers = n - 2
    zigzag = []
    for j in range(1, n - 2):
        h = epsilon * j / layers
        if j % 2 == 1:
            zigzag.append((-half, y0 + h))
        else:
            # strictly inside the segment A_2 A_3, which is at x = half * (1 - h / (1 - y0))
            zigzag.append((half * (1.0 - 2.0 * h / (1.0 - y0)), y0 + h))
    a1 = (-half, y0 + epsilon)
    return Polygon([a1, a2, a3] + zigzag)


def near_diameter_zigzag(n: int, epsilon: float) -> Polygon:
    """Simple even n-gon in the unit disk with every edge of length >= 2 - 2 epsilon.

    Vertices alternate between the far left tip (-1, 0) or points just inside
    it and points fanned out on the circle near (1, 0). The right points sit
    at heights up to sqrt(epsilon), the inner left points inside the narrow
    wedge spanned at the tip, so the edges nest like a stack of thin
    chevrons without crossing. The wedge is about epsilon^1.5 high, so below
    epsilon ~ 1e-7 the default snapping of ``is_simple`` (1e-12) sees touching
    edges; the exact predicate (eps=0) still reports the polygon simple.
    """
    n = _check_n(n, minimum=4)
    if n % 2 == 1:
        raise BadN(f"the diameter zigzag only closes for even n, got {n}")
    _check_epsilon(epsilon)
    if epsilon > 0.25:
        raise BadEpsilon(f"epsilon must be <= 0.25, got {epsilon}")
    m = n // 2
    spread = math.sqrt(epsilon)
    right_y = [spread * (1.0 - 2.0 * j / (m - 1)) for j in range(m)]
    right_x = math.sqrt(1.0 - spread * spread)
    left = [(-1.0, 0.0)]
    # the wedge at the tip has half-height ~ spread * epsilon / 2 at x = -1 + epsilon
    for j in range(1, m):
        t = 1.0 - 2.0 * j / m
        left.append((-1.0 + epsilon, 0.25 * t * spread * epsilon))
    pts = []
    for j in range(m):
        pts.append(left[j])
        pts.append((right_x, right_y[j]))
    return Polygon(pts)


@dataclass(frozen=True)
class ConstructionSpec:
    kind: Kind
    n: int
    epsilon: float = 1e-6
    cluster_split: int | None = None
    radius: float | None = None

    def __post_init__(self):
        object.__setattr__(self, "kind", Kind(self.kind))
        _check_n(self.n)
        if self.kind is Kind.ALTERNATING_COLLINEAR:
            _check_epsilon(self.epsilon, allow_zero=True)
        elif self.kind is not Kind.STAR_THRACKLE:
            _check_epsilon(self.epsilon)
        if self.kind is Kind.TWO_CLUSTER:
            k = self.n // 2 if self.cluster_split is None else self.cluster_split
            if not 1 <= k <= self.n - 1:
                raise BadSplit(f"cluster split must satisfy 1 <= k <= n - 1, got {k}")
        if self.kind in (Kind.STAR_THRACKLE, Kind.SIMPLE_EXTREMAL_F) and self.n % 2 == 0:
            raise BadN(f"{self.kind.value} needs odd n, got {self.n}")
        if self.kind is Kind.NEAR_DIAMETER_ZIGZAG and self.n % 2 == 1:
            raise BadN(f"{self.kind.value} needs even n, got {self.n}")

    @property
    def in_unit_disk(self) -> bool:
        if self.kind is Kind.STAR_THRACKLE:
            return (self.radius or 1.0) <= 1.0
        return self.kind in (Kind.SIMPLE_EXTREMAL_F, Kind.NEAR_DIAMETER_ZIGZAG)

    def build(self) -> Polygon:
        if self.kind is Kind.TWO_CLUSTER:
            k = self.n // 2 if self.cluster_split is None else self.cluster_split
            return two_cluster(self.n, k, self.epsilon)
        if self.kind is Kind.ALTERNATING_COLLINEAR:
            return alternating_collinear(self.n, self.epsilon)
        if self.kind is Kind.STAR_THRACKLE:
            return star_thrackle(self.n, 1.0 if self.radius is None else self.radius)
        if self.kind is Kind.SIMPLE_EXTREMAL_F:
            return simple_extremal_F(self.n, self.epsilon)
        return near_diameter_zigzag(self.n, self.epsilon)
