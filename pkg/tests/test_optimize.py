import math

import numpy as np
import pytest

from polyextrema import bounds as b
from polyextrema import geometry as g
from polyextrema.errors import BadN, PolyExtremaError
from polyextrema.optimize import CATALOG, ConstraintSet, Objective, optimize, optimize_catalog
from polyextrema.optimize.search import random_feasible_start, restart_rng


def test_objective_and_constraints_validation():
    with pytest.raises(ValueError):
        Objective("area", "max")
    with pytest.raises(PolyExtremaError):
        ConstraintSet()
    with pytest.raises(PolyExtremaError):
        ConstraintSet(unit_perimeter=True, require_simple=True)
    with pytest.raises(BadN):
        optimize(Objective("sumdist", "max"), ConstraintSet(unit_perimeter=True), 2)
    with pytest.raises(PolyExtremaError):
        optimize(Objective("sumdist", "max"), ConstraintSet(unit_perimeter=True), 4, restarts=0)


def test_spec_examples():
    run = optimize_catalog("S", 4, seed=0, restarts=50)
    assert abs(run.best_value - 2.0) <= 1e-3
    run = optimize_catalog("G", 5, seed=0, restarts=50)
    assert abs(run.best_value - 9.510565162951535) <= 1e-3
    run = optimize_catalog("t", 3, seed=0, restarts=50)
    assert abs(run.best_value - 1 / 3) <= 1e-6


@pytest.mark.parametrize("name", list(CATALOG))
def test_best_polygon_satisfies_constraints(name):
    objective, constraints = CATALOG[name]
    run = optimize(objective, constraints, 5, seed=3, restarts=8)
    assert constraints.satisfied_by(run.best_polygon)
    assert abs(objective.evaluate(run.best_polygon) - run.best_value) <= 1e-12
    assert len(run.history) == 8
    assert run.best_value == (max if objective.maximize else min)(v for _, v in run.history)


def test_determinism_bit_identical():
    a = optimize_catalog("T", 5, seed=11, restarts=6)
    b_ = optimize_catalog("T", 5, seed=11, restarts=6)
    assert a.best_value == b_.best_value
    assert np.array_equal(a.best_polygon.vertices, b_.best_polygon.vertices)
    assert a.history == b_.history
    c = optimize_catalog("T", 5, seed=12, restarts=6)
    assert c.history != a.history


def test_serial_and_parallel_agree():
    a = optimize_catalog("F", 5, seed=5, restarts=6)
    b_ = optimize_catalog("F", 5, seed=5, restarts=6, workers=2)
    assert a.history == b_.history
    assert np.array_equal(a.best_polygon.vertices, b_.best_polygon.vertices)


def test_ties_go_to_lowest_index():
    # every start of the n = 3 sum-of-distances problem has value exactly 1
    run = optimize_catalog("S", 3, seed=0, restarts=5)
    values = [v for _, v in run.history]
    assert run.best_restart == values.index(max(values))


def test_seeded_restart_only_for_simple_problems():
    assert optimize_catalog("F", 5, restarts=1).seeded
    assert not optimize_catalog("G", 5, restarts=1).seeded
    assert not optimize_catalog("F", 5, restarts=1, seed_construction=False).seeded


def test_random_starts_are_feasible():
    for name in CATALOG:
        _, cons = CATALOG[name]
        x = random_feasible_start(6, cons, restart_rng(1, 2))
        p = g.Polygon(x.reshape(-1, 2))
        assert cons.satisfied_by(p)


@pytest.mark.parametrize("name,n", [("s", 5), ("S", 5), ("t", 4), ("T", 6)])
def test_every_accepted_iterate_respects_bounds(name, n):
    run = optimize_catalog(name, n, seed=2, restarts=4, max_iters=400, track=True)
    assert run.accepted
    for _, value, poly in run.accepted:
        assert g.perimeter(poly) == pytest.approx(1.0, abs=1e-9)
        if name == "s":
            assert value >= n / 4 - 1e-9
        elif name == "S":
            assert value <= b.S_max(n) + 1e-9
        elif name == "t":
            assert value >= 1 / 8 - 1e-9
        else:
            assert value <= b.T_max(n) + 1e-9


def test_accepted_iterates_simple_when_required():
    run = optimize_catalog("F", 5, seed=4, restarts=3, max_iters=400, track=True)
    assert run.accepted
    for _, value, poly in run.accepted:
        assert g.is_simple(poly)
        assert g.inside_unit_disk(poly)
        assert value <= b.F_max(5) + 1e-9


def test_run_serializes():
    run = optimize_catalog("G", 3, seed=0, restarts=2)
    obj = run.to_json_obj()
    assert obj["objective"] == {"kind": "perimeter", "direction": "max"}
    assert len(obj["best_polygon"]["vertices"]) == 3
    assert obj["best_value"] == pytest.approx(3 * math.sqrt(3), rel=1e-6)
