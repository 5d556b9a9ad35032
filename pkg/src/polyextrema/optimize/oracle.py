"""Exhaustive grid search for n = 3, 4, used only to audit the restart search.

Coordinates are drawn from a ``res``-point grid on [-1, 1] per axis. Exact
symmetries shrink the search without losing any configuration:

* unit-perimeter problems are similarity invariant, so A_1 = (0, 0),
  A_2 = (r, 0) with r in [0, 1], and every vertex within distance 1 of A_1;
* disk problems are rotation invariant about the center, so A_1 = (rho, 0)
  with rho in [0, 1]; grid points outside the disk are pushed radially onto it.

Everything here is plain numpy and shares no code with the compiled search.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass

import numpy as np

from polyextrema.errors import PolyExtremaError, TooLarge
from polyextrema.geometry import DEFAULT_EPS, Polygon
from polyextrema.optimize.search import ConstraintSet, Objective, ObjectiveKind

MAX_RESOLUTION = 50


@dataclass(frozen=True)
class OracleResult:
    value: float
    polygon: Polygon
    granularity: float
    evaluated: int


def _check(n, res):
    if n not in (3, 4):
        raise TooLarge(f"the grid oracle only handles n in {{3, 4}}, got {n}")
    if not 2 <= res <= MAX_RESOLUTION:
        raise PolyExtremaError(f"grid_resolution must be in [2, {MAX_RESOLUTION}], got {res}")


def _batch_orient(a, b, c, eps):
    det = (b[:, 0] - a[:, 0]) * (c[:, 1] - a[:, 1]) - (b[:, 1] - a[:, 1]) * (c[:, 0] - a[:, 0])
    return np.where(np.abs(det) < eps, 0, np.sign(det))


def _batch_on_segment(a, b, q):
    return ((np.minimum(a[:, 0], b[:, 0]) <= q[:, 0]) & (q[:, 0] <= np.maximum(a[:, 0], b[:, 0]))
            & (np.minimum(a[:, 1], b[:, 1]) <= q[:, 1]) & (q[:, 1] <= np.maximum(a[:, 1], b[:, 1])))


def batch_is_simple(V: np.ndarray, eps: float = DEFAULT_EPS) -> np.ndarray:
    """Vectorized simplicity test over a batch of polygons, shape (B, n, 2)."""
    B, n, _ = V.shape
    ok = np.ones(B, dtype=bool)
    for i in range(n):
        a, b, c = V[:, i - 1], V[:, i], V[:, (i + 1) % n]
        dot = (b[:, 0] - a[:, 0]) * (c[:, 0] - b[:, 0]) + (b[:, 1] - a[:, 1]) * (c[:, 1] - b[:, 1])
        ok &= ~((_batch_orient(a, b, c, eps) == 0) & (dot < 0))
    for i in range(n):
        for j in range(i + 2, n):
            if i == 0 and j == n - 1:
                continue
            a, b = V[:, i], V[:, (i + 1) % n]
            c, d = V[:, j], V[:, (j + 1) % n]
            o1 = _batch_orient(a, b, c, eps)
            o2 = _batch_orient(a, b, d, eps)
            o3 = _batch_orient(c, d, a, eps)
            o4 = _batch_orient(c, d, b, eps)
            hit = (o1 * o2 < 0) & (o3 * o4 < 0)
            hit |= (o1 == 0) & _batch_on_segment(a, b, c)
            hit |= (o2 == 0) & _batch_on_segment(a, b, d)
            hit |= (o3 == 0) & _batch_on_segment(c, d, a)
            hit |= (o4 == 0) & _batch_on_segment(c, d, b)
            ok &= ~hit
    return ok


def _batch_values(V, objective: Objective, constraints: ConstraintSet, eps):
    edges = np.roll(V, -1, axis=1) - V
    per = np.hypot(edges[..., 0], edges[..., 1]).sum(axis=1)
    if objective.kind is ObjectiveKind.PERIMETER:
        raw, power = per, 1
    else:
        i, j = np.triu_indices(V.shape[1], k=1)
        d = V[:, j] - V[:, i]
        if objective.kind is ObjectiveKind.SUM_DISTANCES:
            raw, power = np.hypot(d[..., 0], d[..., 1]).sum(axis=1), 1
        else:
            raw, power = (d * d).sum(axis=(1, 2)), 2
    with np.errstate(divide="ignore", invalid="ignore"):
        if constraints.unit_perimeter:
            value = raw / per ** power
            value[per == 0] = np.nan
        else:
            value = raw.astype(float)
    if constraints.require_simple:
        value[~batch_is_simple(V, eps)] = np.nan
    return value


def _project_disk(P):
    r = np.hypot(P[..., 0], P[..., 1])
    scale = np.where(r > 1.0, 1.0 / np.where(r > 0, r, 1.0), 1.0)
    return P * scale[..., None]


def _displacements(n, res, disk):
    """Largest distance from a configuration to its nearest grid representative, per vertex."""
    h = 2.0 / (res - 1)
    box = h / math.sqrt(2.0)
    half_line = 0.5 / (res - 1)
    if disk:
        return [half_line] + [box] * (n - 1)
    return [0.0, half_line] + [box] * (n - 2)


def grid_granularity_bound(objective: Objective, constraints: ConstraintSet, n: int,
                           grid_resolution: int) -> float:
    """Worst-case objective change between a polygon and its nearest grid representative.

    Built from per-vertex displacement bounds d_i with Lipschitz estimates of
    each functional; for the unit-perimeter ratios it uses that a gauge
    representative has perimeter >= 2 (some vertex is at distance 1 from A_1).
    """
    _check(n, grid_resolution)
    d = _displacements(n, grid_resolution, constraints.inside_unit_disk)
    edge_shift = sum(d[i] + d[(i + 1) % n] for i in range(n))
    pair_shift = sum(d[i] + d[j] for i, j in itertools.combinations(range(n), 2))
    if constraints.inside_unit_disk:
        if objective.kind is ObjectiveKind.PERIMETER:
            return edge_shift
        dmax = 2 * max(d)
        if objective.kind is ObjectiveKind.SUM_DISTANCES:
            return pair_shift
        return pair_shift * (4.0 + dmax)
    p_min = 2.0 - edge_shift
    if p_min <= 0:
        return math.inf
    if objective.kind is ObjectiveKind.PERIMETER:
        return 0.0
    pairs = n * (n - 1) / 2
    if objective.kind is ObjectiveKind.SUM_DISTANCES:
        f_star = pairs / 2  # a pair distance never exceeds half the perimeter
        return (pair_shift + f_star * edge_shift) / p_min
    dmax = 2 * max(d)
    f_star = pairs / 4
    p_max = 2.0 * n + edge_shift
    return (pair_shift * (4.0 + dmax) + f_star * edge_shift * (2.0 * n + p_max)) / p_min ** 2


def oracle_search(objective: Objective, constraints: ConstraintSet, n: int,
                  grid_resolution: int, eps: float = DEFAULT_EPS) -> OracleResult:
    n = int(n)
    res = int(grid_resolution)
    _check(n, res)
    axis = np.linspace(-1.0, 1.0, res)
    line = np.linspace(0.0, 1.0, res)
    grid = np.stack(np.meshgrid(axis, axis, indexing="ij"), axis=-1).reshape(-1, 2)
    disk = constraints.inside_unit_disk
    if disk:
        grid = _project_disk(grid)
    sign = 1.0 if objective.maximize else -1.0

    best_val, best_poly, count = -math.inf, None, 0
    # fixed prefix vertices are looped over; the last two free vertices are vectorized
    if disk:
        prefix_axes = [[(rho, 0.0) for rho in line]] + [list(map(tuple, grid))] * (n - 3)
    else:
        prefix_axes = [[(0.0, 0.0)], [(r, 0.0) for r in line]] + [list(map(tuple, grid))] * (n - 4)
    n_free = 2 if (disk and n >= 3) or (not disk and n == 4) else 1
    ia, ib = np.meshgrid(np.arange(len(grid)), np.arange(len(grid)), indexing="ij")
    tail = (np.stack([grid[ia.ravel()], grid[ib.ravel()]], axis=1) if n_free == 2
            else grid[:, None, :])
    for prefix in itertools.product(*prefix_axes):
        head = np.broadcast_to(np.array(prefix, dtype=float), (tail.shape[0], len(prefix), 2))
        V = np.concatenate([head, tail], axis=1)
        vals = _batch_values(V, objective, constraints, eps)
        count += V.shape[0]
        if np.all(np.isnan(vals)):
            continue
        k = int(np.nanargmax(sign * vals))
        if sign * vals[k] > best_val:
            best_val = sign * vals[k]
            best_poly = V[k].copy()
    if best_poly is None:
        raise PolyExtremaError("no feasible grid configuration")
    return OracleResult(
        value=float(sign * best_val),
        polygon=Polygon(best_poly),
        granularity=grid_granularity_bound(objective, constraints, n, res),
        evaluated=count,
    )


def brute_force_oracle(objective: Objective, constraints: ConstraintSet, n: int,
                       grid_resolution: int) -> float:
    return oracle_search(objective, constraints, n, grid_resolution).value
