"""Multi-start derivative-free search over n-gons.

Each restart draws its own random stream from ``(seed, restart index)``,
samples a feasible start, and runs a projected Nelder-Mead descent on the
2n coordinates. Feasibility is restored after every trial step: rescaling
to unit perimeter, radial projection into the unit disk, and rejection of
non-simple trials. Restart results are merged by best value, ties going
to the lowest restart index, so serial and parallel runs agree bit for bit.
"""

from __future__ import annotations

import enum
import math
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field

import numpy as np

from polyextrema import constructions, geometry
from polyextrema.errors import BadN, InfeasibleStart, PolyExtremaError
from polyextrema.geometry import Polygon
from polyextrema.optimize import _kernels as K

START_ATTEMPTS = 10_000
SEEDED_EPSILON = 1e-4


class ObjectiveKind(str, enum.Enum):
    SUM_DISTANCES = "sumdist"
    SUM_SQUARED_DISTANCES = "sumsq"
    PERIMETER = "perimeter"


class Direction(str, enum.Enum):
    MAXIMIZE = "max"
    MINIMIZE = "min"


@dataclass(frozen=True)
class Objective:
    kind: ObjectiveKind
    direction: Direction

    def __post_init__(self):
        object.__setattr__(self, "kind", ObjectiveKind(self.kind))
        object.__setattr__(self, "direction", Direction(self.direction))

    @property
    def maximize(self) -> bool:
        return self.direction is Direction.MAXIMIZE

    def evaluate(self, p: Polygon) -> float:
        if self.kind is ObjectiveKind.SUM_DISTANCES:
            return geometry.sum_pairwise_distances(p)
        if self.kind is ObjectiveKind.SUM_SQUARED_DISTANCES:
            return geometry.sum_pairwise_squared_distances(p)
        return geometry.perimeter(p)

    def better(self, a: float, b: float) -> bool:
        """Strictly better; equal values never win, which keeps index tie-breaks."""
        return a > b if self.maximize else a < b


@dataclass(frozen=True)
class ConstraintSet:
    unit_perimeter: bool = False
    inside_unit_disk: bool = False
    require_simple: bool = False

    def __post_init__(self):
        if not (self.unit_perimeter or self.inside_unit_disk):
            raise PolyExtremaError("constraints need unit_perimeter or inside_unit_disk")
        if self.require_simple and not self.inside_unit_disk:
            raise PolyExtremaError("require_simple is only supported together with inside_unit_disk")

    def satisfied_by(self, p: Polygon, eps: float = geometry.DEFAULT_EPS) -> bool:
        if self.unit_perimeter and abs(geometry.perimeter(p) - 1.0) > 1e-9:
            return False
        if self.inside_unit_disk and not geometry.inside_unit_disk(p, tol=1e-12):
            return False
        if self.require_simple and not geometry.is_simple(p, eps):
            return False
        return True


# the six extremal problems, keyed by the name of the value they probe
CATALOG = {
    "s": (Objective("sumdist", "min"), ConstraintSet(unit_perimeter=True)),
    "S": (Objective("sumdist", "max"), ConstraintSet(unit_perimeter=True)),
    "t": (Objective("sumsq", "min"), ConstraintSet(unit_perimeter=True)),
    "T": (Objective("sumsq", "max"), ConstraintSet(unit_perimeter=True)),
    "F": (Objective("perimeter", "max"), ConstraintSet(inside_unit_disk=True, require_simple=True)),
    "G": (Objective("perimeter", "max"), ConstraintSet(inside_unit_disk=True)),
}


@dataclass
class OptimizationRun:
    objective: Objective
    constraints: ConstraintSet
    n: int
    seed: int
    restarts: int
    max_iters: int
    best_value: float
    best_polygon: Polygon
    history: list[tuple[int, float]] = field(default_factory=list)
    best_restart: int = 0
    seeded: bool = False
    # accepted feasible iterates: list of (restart index, value, polygon); filled when track=True
    accepted: list[tuple[int, float, Polygon]] = field(default_factory=list, repr=False)

    def to_json_obj(self) -> dict:
        return {
            "objective": {"kind": self.objective.kind.value, "direction": self.objective.direction.value},
            "constraints": {
                "unit_perimeter": self.constraints.unit_perimeter,
                "inside_unit_disk": self.constraints.inside_unit_disk,
                "require_simple": self.constraints.require_simple,
            },
            "n": self.n,
            "seed": self.seed,
            "restarts": self.restarts,
            "max_iters": self.max_iters,
            "best_value": self.best_value,
            "best_restart": self.best_restart,
            "seeded": self.seeded,
            "best_polygon": self.best_polygon.to_json_obj(),
            "history": [[i, v] for i, v in self.history],
        }


def _flags(constraints: ConstraintSet):
    return constraints.unit_perimeter, constraints.inside_unit_disk, constraints.require_simple


def _kind_code(kind: ObjectiveKind) -> int:
    return {ObjectiveKind.SUM_DISTANCES: K.SUMDIST,
            ObjectiveKind.SUM_SQUARED_DISTANCES: K.SUMSQ,
            ObjectiveKind.PERIMETER: K.PERIMETER}[kind]


def restart_rng(seed: int, restart: int) -> np.random.Generator:
    return np.random.default_rng(np.random.SeedSequence([int(seed), int(restart)]))


def random_feasible_start(n: int, constraints: ConstraintSet, rng: np.random.Generator,
                          eps: float = geometry.DEFAULT_EPS) -> np.ndarray:
    """i.i.d. uniform vertices in [-1, 1]^2, projected; resampled until feasible."""
    unit, disk, simple = _flags(constraints)
    for _ in range(START_ATTEMPTS):
        x = rng.uniform(-1.0, 1.0, size=2 * n)
        if not K.project_k(x, n, unit, disk):
            continue
        if simple and not K.is_simple_k(x, n, eps):
            continue
        return x
    raise InfeasibleStart(f"no feasible start for n={n} with {constraints} in {START_ATTEMPTS} attempts")


def seeded_start(n: int, constraints: ConstraintSet) -> np.ndarray | None:
    """Start near the known extremal family, for problems whose optimum is a flat degenerate limit."""
    if not constraints.require_simple:
        return None
    if n % 2 == 1:
        p = constructions.simple_extremal_F(n, SEEDED_EPSILON)
    else:
        p = constructions.near_diameter_zigzag(n, SEEDED_EPSILON)
    return np.ascontiguousarray(p.vertices, dtype=float).ravel().copy()


def _initial_step(x: np.ndarray, n: int, constraints: ConstraintSet) -> float:
    if constraints.unit_perimeter:
        return 0.25 / n  # a quarter of the mean edge length
    return 0.1


def _run_restart(args):
    (objective, constraints, n, seed, index, max_iters, eps, track, start) = args
    unit, disk, simple = _flags(constraints)
    if start is None:
        x0 = random_feasible_start(n, constraints, restart_rng(seed, index), eps)
    else:
        x0 = start.copy()
        if not K.project_k(x0, n, unit, disk) or (simple and not K.is_simple_k(x0, n, eps)):
            raise InfeasibleStart("seeded start is infeasible")
    sign = -1.0 if objective.maximize else 1.0
    cap = (max_iters + 1) * (2 * n + 2) if track else 0
    trace = np.empty((cap, 2 * n))
    trace_vals = np.empty(cap)
    best, best_loss, _, count = K.nelder_mead_k(
        x0, n, _kind_code(objective.kind), sign, unit, disk, simple, eps,
        _initial_step(x0, n, constraints), max_iters, trace, trace_vals)
    accepted = []
    if track:
        m = min(count, cap)
        accepted = [(index, float(trace_vals[i]), trace[i].reshape(n, 2).copy()) for i in range(m)]
    return index, best.reshape(n, 2).copy(), accepted


def optimize(objective: Objective, constraints: ConstraintSet, n: int, seed: int = 0,
             restarts: int = 200, max_iters: int = 2000, *, eps: float = geometry.DEFAULT_EPS,
             seed_construction: bool = True, track: bool = False, workers: int = 1) -> OptimizationRun:
    """Best feasible polygon over ``restarts`` independent projected Nelder-Mead descents.

    With ``require_simple`` and ``seed_construction``, restart 0 starts from
    the known extremal family (its optimum is a degenerate limit where blind
    search stalls); all other restarts start from random feasible polygons.
    ``track=True`` keeps every accepted feasible iterate in ``run.accepted``.
    """
    if isinstance(n, bool) or int(n) != n or n < 3:
        raise BadN(f"n must be an integer >= 3, got {n!r}")
    if restarts < 1:
        raise PolyExtremaError(f"restarts must be >= 1, got {restarts}")
    if max_iters < 1:
        raise PolyExtremaError(f"max_iters must be >= 1, got {max_iters}")
    n = int(n)
    seed = int(seed)
    if not 0 <= seed < 2 ** 64:
        raise PolyExtremaError(f"seed must be an unsigned 64-bit integer, got {seed}")
    seeded = seeded_start(n, constraints) if seed_construction else None
    jobs = [(objective, constraints, n, seed, i, max_iters, eps, track,
             seeded if i == 0 else None) for i in range(restarts)]
    if workers > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            results = list(pool.map(_run_restart, jobs))
    else:
        results = [_run_restart(job) for job in jobs]

    history = []
    accepted = []
    best_index, best_poly, best_value = -1, None, math.nan
    for index, verts, acc in sorted(results, key=lambda r: r[0]):
        poly = Polygon(verts)
        value = objective.evaluate(poly)
        history.append((index, value))
        accepted.extend((i, v, Polygon(q)) for i, v, q in acc)
        if best_poly is None or objective.better(value, best_value):
            best_index, best_poly, best_value = index, poly, value
    return OptimizationRun(
        objective=objective,
        constraints=constraints,
        n=n,
        seed=seed,
        restarts=restarts,
        max_iters=max_iters,
        best_value=best_value,
        best_polygon=best_poly,
        history=history,
        best_restart=best_index,
        seeded=seeded is not None,
        accepted=accepted,
    )


def optimize_catalog(name: str, n: int, **kwargs) -> OptimizationRun:
    objective, constraints = CATALOG[name]
    return optimize(objective, constraints, n, **kwargs)
