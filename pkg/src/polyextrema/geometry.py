"""Planar polygons and the metric functionals evaluated on them.

A polygon is a cyclic vertex sequence; edge ``i`` joins vertex ``i`` to
vertex ``(i + 1) % n``. Coincident vertices are legal, since most of the
extremal values handled by this package are only reached in degenerate
limits.

All functionals are plain O(n^2) pair sums.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterable, Sequence

import numpy as np

from polyextrema.errors import (
    BadIndexSet,
    NonFiniteCoordinate,
    TooFewVertices,
    ZeroPerimeter,
)

DEFAULT_EPS = 1e-12


@dataclass(frozen=True)
class Point:
    x: float
    y: float

    def __post_init__(self):
        if not (math.isfinite(self.x) and math.isfinite(self.y)):
            raise NonFiniteCoordinate(f"non-finite point ({self.x}, {self.y})")

    def __iter__(self):
        yield self.x
        yield self.y


@dataclass(frozen=True, eq=False)
class Polygon:
    """Immutable cyclic vertex sequence backed by a read-only (n, 2) array."""

    vertices: np.ndarray

    def __init__(self, vertices: Iterable[Sequence[float]] | np.ndarray):
        arr = np.array([tuple(v) for v in vertices] if not isinstance(vertices, np.ndarray)
                       else vertices, dtype=float)
        if arr.ndim != 2 or arr.shape[1] != 2:
            raise TooFewVertices(f"expected an (n, 2) vertex array, got shape {arr.shape}")
        if arr.shape[0] < 3:
            raise TooFewVertices(f"a polygon needs n >= 3 vertices, got {arr.shape[0]}")
        if not np.all(np.isfinite(arr)):
            raise NonFiniteCoordinate("polygon has non-finite coordinates")
        arr = arr.copy()
        arr.flags.writeable = False
        object.__setattr__(self, "vertices", arr)

    @property
    def n(self) -> int:
        return self.vertices.shape[0]

    def __len__(self):
        return self.n

    def __eq__(self, other):
        if not isinstance(other, Polygon):
            return NotImplemented
        return np.array_equal(self.vertices, other.vertices)

    def __hash__(self):
        return hash(self.vertices.tobytes())

    def __repr__(self):
        return f"Polygon(n={self.n}, vertices={self.vertices.tolist()!r})"

    def points(self) -> list[Point]:
        return [Point(float(x), float(y)) for x, y in self.vertices]

    def scaled(self, factor: float, center=(0.0, 0.0)) -> Polygon:
        c = np.asarray(center, dtype=float)
        return Polygon(c + factor * (self.vertices - c))

    def translated(self, dx: float, dy: float) -> Polygon:
        return Polygon(self.vertices + np.array([dx, dy]))

    def edges(self) -> np.ndarray:
        """Edge vectors, shape (n, 2); row i is A_{i+1} - A_i."""
        return np.roll(self.vertices, -1, axis=0) - self.vertices

    def edge_lengths(self) -> np.ndarray:
        return np.hypot(*self.edges().T)

    def centroid(self) -> np.ndarray:
        return self.vertices.mean(axis=0)

    def to_json_obj(self) -> dict:
        return {"vertices": self.vertices.tolist()}

    @classmethod
    def from_json_obj(cls, obj) -> Polygon:
        return cls(obj["vertices"])


@dataclass(frozen=True)
class MetricSummary:
    perimeter: float
    sum_distances: float
    sum_squared_distances: float
    longest_edge: float


def _pair_distances(p: Polygon) -> np.ndarray:
    v = p.vertices
    i, j = np.triu_indices(p.n, k=1)
    d = v[j] - v[i]
    return np.hypot(d[:, 0], d[:, 1])


def perimeter(p: Polygon) -> float:
    return float(p.edge_lengths().sum())


def sum_pairwise_distances(p: Polygon) -> float:
    return float(_pair_distances(p).sum())


def sum_pairwise_squared_distances(p: Polygon) -> float:
    v = p.vertices
    i, j = np.triu_indices(p.n, k=1)
    d = v[j] - v[i]
    return float((d * d).sum())


def metric_summary(p: Polygon) -> MetricSummary:
    return MetricSummary(
        perimeter=perimeter(p),
        sum_distances=sum_pairwise_distances(p),
        sum_squared_distances=sum_pairwise_squared_distances(p),
        longest_edge=float(p.edge_lengths().max()),
    )


def normalize_to_unit_perimeter(p: Polygon) -> Polygon:
    """Scale ``p`` about its centroid so that its perimeter becomes 1."""
    per = perimeter(p)
    if per == 0.0:
        raise ZeroPerimeter("cannot normalize a polygon with zero perimeter")
    if per == 1.0:
        return p
    return p.scaled(1.0 / per, center=p.centroid())


def orientation(a, b, c, eps: float = DEFAULT_EPS) -> int:
    """Sign of the determinant (b - a) x (c - a); |det| < eps counts as collinear."""
    det = (b[0] - a[0]) * (c[1] - a[1]) - (b[1] - a[1]) * (c[0] - a[0])
    if abs(det) < eps:
        return 0
    return 1 if det > 0 else -1


def _on_segment(a, b, q) -> bool:
    # q is already known to be collinear with ab
    return (min(a[0], b[0]) <= q[0] <= max(a[0], b[0])
            and min(a[1], b[1]) <= q[1] <= max(a[1], b[1]))


def segments_intersect(a, b, c, d, eps: float = DEFAULT_EPS) -> bool:
    """Closed-segment intersection test for ab and cd, touching included."""
    o1 = orientation(a, b, c, eps)
    o2 = orientation(a, b, d, eps)
    o3 = orientation(c, d, a, eps)
    o4 = orientation(c, d, b, eps)
    if o1 * o2 < 0 and o3 * o4 < 0:
        return True
    if o1 == 0 and _on_segment(a, b, c):
        return True
    if o2 == 0 and _on_segment(a, b, d):
        return True
    if o3 == 0 and _on_segment(c, d, a):
        return True
    if o4 == 0 and _on_segment(c, d, b):
        return True
    return False


def _adjacent_overlap(a, b, c, eps: float) -> bool:
    """Edges ab and bc share b; they overlap iff collinear and folding back."""
    if orientation(a, b, c, eps) != 0:
        return False
    return (b[0] - a[0]) * (c[0] - b[0]) + (b[1] - a[1]) * (c[1] - b[1]) < 0


def is_simple(p: Polygon, eps: float = DEFAULT_EPS) -> bool:
    """True iff non-adjacent edges are disjoint and adjacent edges meet only at their shared vertex.

    A zero-length edge makes its two neighbours touch, so polygons with
    coincident consecutive vertices (n >= 4) are reported non-simple.
    """
    v = [tuple(map(float, q)) for q in p.vertices]
    n = len(v)
    for i in range(n):
        if _adjacent_overlap(v[i - 1], v[i], v[(i + 1) % n], eps):
            return False
    for i in range(n):
        a, b = v[i], v[(i + 1) % n]
        for j in range(i + 2, n):
            if i == 0 and j == n - 1:
                continue  # edges n-1 and 0 are adjacent
            if segments_intersect(a, b, v[j], v[(j + 1) % n], eps):
                return False
    return True


def is_convex_position(p: Polygon) -> bool:
    """True iff the vertices, in their given cyclic order, trace a convex polygon.

    Collinear consecutive edges are allowed, fold-backs are not, and the
    boundary must wind exactly once (a pentagram has consistent turns but
    winds twice). Coincident consecutive vertices are merged first.
    """
    v = p.vertices
    keep = [v[0]]
    for q in v[1:]:
        if not np.array_equal(q, keep[-1]):
            keep.append(q)
    if len(keep) > 1 and np.array_equal(keep[0], keep[-1]):
        keep.pop()
    if len(keep) < 3:
        return False
    w = np.array(keep)
    e = np.roll(w, -1, axis=0) - w
    e_next = np.roll(e, -1, axis=0)
    cross = e[:, 0] * e_next[:, 1] - e[:, 1] * e_next[:, 0]
    dot = e[:, 0] * e_next[:, 0] + e[:, 1] * e_next[:, 1]
    if np.any(cross > 0) and np.any(cross < 0):
        return False
    if np.any((cross == 0) & (dot < 0)):
        return False
    turning = np.arctan2(cross, dot).sum()
    return abs(abs(turning) - 2 * math.pi) < 1e-6


def subpolygon_perimeter(p: Polygon, indices: Sequence[int]) -> float:
    """Perimeter of the sub-polygon on the given 0-based, strictly increasing vertex indices.

    Never exceeds ``perimeter(p)`` (triangle inequality along each skipped run).
    """
    idx = list(indices)
    if len(idx) < 3:
        raise BadIndexSet(f"a sub-polygon needs at least 3 vertices, got {len(idx)}")
    if any(b <= a for a, b in zip(idx, idx[1:])):
        raise BadIndexSet(f"indices must be strictly increasing: {idx}")
    if idx[0] < 0 or idx[-1] >= p.n:
        raise BadIndexSet(f"indices must lie in [0, {p.n - 1}]: {idx}")
    return perimeter(Polygon(p.vertices[idx]))


def point_line_distance(o, a, b) -> float:
    """Distance from o to the line through a and b; distance to a when a == b."""
    ax, ay = a
    bx, by = b
    dx, dy = bx - ax, by - ay
    length = math.hypot(dx, dy)
    if length == 0.0:
        return math.hypot(o[0] - ax, o[1] - ay)
    return abs(dx * (o[1] - ay) - dy * (o[0] - ax)) / length


def point_pair_square_bound(o, a, b) -> tuple[float, float]:
    """Return ``(|oa|^2 + |ob|^2, |ab|^2 / 2 + 2 y^2)`` with y the distance from o to line ab.

    The first entry is never smaller than the second.
    """
    lhs = (o[0] - a[0]) ** 2 + (o[1] - a[1]) ** 2 + (o[0] - b[0]) ** 2 + (o[1] - b[1]) ** 2
    y = point_line_distance(o, a, b)
    ab2 = (a[0] - b[0]) ** 2 + (a[1] - b[1]) ** 2
    return lhs, ab2 / 2 + 2 * y * y


def inside_unit_disk(p: Polygon, tol: float = 1e-12) -> bool:
    return bool(np.all(np.hypot(*p.vertices.T) <= 1.0 + tol))
