import math

import numpy as np
import pytest
from hypothesis import assume, given, settings
from hypothesis import strategies as st

from polyextrema import geometry as g
from polyextrema.errors import BadIndexSet, NonFiniteCoordinate, TooFewVertices, ZeroPerimeter
from polyextrema.geometry import Point, Polygon

coord = st.floats(-10, 10, allow_nan=False, allow_infinity=False)
point = st.tuples(coord, coord)
polygons = st.lists(point, min_size=3, max_size=12).map(Polygon)


def square(side):
    return Polygon([(0, 0), (side, 0), (side, side), (0, side)])


def test_perimeter_examples():
    assert g.perimeter(square(0.25)) == pytest.approx(1.0, abs=1e-15)
    tri = Polygon([(math.cos(t), math.sin(t)) for t in (math.pi / 2 + k * 2 * math.pi / 3 for k in range(3))])
    assert g.perimeter(tri) == pytest.approx(3 * math.sqrt(3), rel=1e-14)
    assert g.perimeter(Polygon([(2, 3)] * 5)) == 0.0


def test_pair_sums_on_unit_square():
    sq = square(1.0)
    assert g.sum_pairwise_distances(sq) == pytest.approx(4 + 2 * math.sqrt(2), rel=1e-15)
    assert g.sum_pairwise_squared_distances(sq) == pytest.approx(8.0, rel=1e-15)


def test_pair_sums_match_double_loop():
    rng = np.random.default_rng(3)
    V = rng.normal(size=(9, 2))
    p = Polygon(V)
    d = sum(math.dist(V[i], V[j]) for i in range(9) for j in range(i + 1, 9))
    d2 = sum(math.dist(V[i], V[j]) ** 2 for i in range(9) for j in range(i + 1, 9))
    assert g.sum_pairwise_distances(p) == pytest.approx(d, rel=1e-13)
    assert g.sum_pairwise_squared_distances(p) == pytest.approx(d2, rel=1e-13)


def test_metric_summary_invariants():
    m = g.metric_summary(square(2.0))
    assert m.perimeter <= m.sum_distances
    assert m.longest_edge <= m.perimeter
    assert m.longest_edge == pytest.approx(2.0)


def test_polygon_validation():
    with pytest.raises(TooFewVertices):
        Polygon([(0, 0), (1, 1)])
    with pytest.raises(NonFiniteCoordinate):
        Polygon([(0, 0), (1, float("nan")), (2, 0)])
    with pytest.raises(NonFiniteCoordinate):
        Point(float("inf"), 0)


def test_polygon_is_immutable_and_roundtrips():
    p = square(1.0)
    with pytest.raises(ValueError):
        p.vertices[0, 0] = 5.0
    assert Polygon.from_json_obj(p.to_json_obj()) == p
    assert hash(Polygon.from_json_obj(p.to_json_obj())) == hash(p)


def test_normalize():
    p = g.normalize_to_unit_perimeter(square(3.0))
    assert g.perimeter(p) == pytest.approx(1.0, abs=1e-15)
    with pytest.raises(ZeroPerimeter):
        g.normalize_to_unit_perimeter(Polygon([(1, 1)] * 3))


def test_is_simple_examples():
    assert g.is_simple(square(1.0))
    bowtie = Polygon([(0, 0), (1, 1), (1, 0), (0, 1)])
    assert not g.is_simple(bowtie)
    # a vertex touching a non-adjacent edge counts as an intersection
    touching = Polygon([(0, 0), (2, 0), (1, 0), (1, 1)])
    assert not g.is_simple(touching)
    # fold-back between adjacent edges
    assert not g.is_simple(Polygon([(0, 0), (2, 0), (1, 0)]))


def test_is_simple_eps_snaps_near_collinear():
    tiny = 1e-14
    p = Polygon([(0, 0), (2, 0), (1, tiny), (1, 1)])
    assert not g.is_simple(p)  # |det| below eps counts as touching
    assert g.is_simple(p, eps=0.0)


def test_is_convex_position():
    assert g.is_convex_position(square(1.0))
    assert not g.is_convex_position(Polygon([(0, 0), (1, 1), (1, 0), (0, 1)]))
    pent = [(math.cos(2 * math.pi * k / 5), math.sin(2 * math.pi * k / 5)) for k in range(5)]
    assert g.is_convex_position(Polygon(pent))
    pentagram = [pent[(2 * k) % 5] for k in range(5)]
    assert not g.is_convex_position(Polygon(pentagram))
    # duplicated vertices are merged before the test
    assert g.is_convex_position(Polygon([(0, 0), (0, 0), (1, 0), (1, 1), (0, 1)]))


def test_subpolygon_perimeter_uses_zero_based_indices():
    sq = square(1.0)
    assert g.subpolygon_perimeter(sq, [0, 1, 2]) == pytest.approx(2 + math.sqrt(2))
    for bad in ([0, 1], [0, 2, 1], [0, 1, 4], [-1, 0, 1], [1, 1, 2]):
        with pytest.raises(BadIndexSet):
            g.subpolygon_perimeter(sq, bad)


def test_point_pair_square_bound_examples():
    assert g.point_pair_square_bound((0, 0), (-1, 0), (1, 0)) == pytest.approx((2.0, 2.0))
    assert g.point_pair_square_bound((0, 1), (-1, 0), (1, 0)) == pytest.approx((4.0, 4.0))
    lhs, rhs = g.point_pair_square_bound((0.3, 0.7), (0, 0), (1, 0))
    assert lhs >= rhs
    # degenerate line: distance to the point itself
    lhs, rhs = g.point_pair_square_bound((3, 4), (0, 0), (0, 0))
    assert (lhs, rhs) == pytest.approx((50.0, 50.0))


@given(polygons)
def test_pair_sum_dominates_perimeter(p):
    assert g.sum_pairwise_distances(p) >= g.perimeter(p) - 1e-12 * (1 + g.perimeter(p))


@given(polygons, st.data())
def test_subpolygon_never_longer(p, data):
    k = data.draw(st.integers(3, p.n))
    idx = sorted(data.draw(st.lists(st.integers(0, p.n - 1), min_size=k, max_size=k, unique=True)))
    assert g.subpolygon_perimeter(p, idx) <= g.perimeter(p) + 1e-12 * (1 + g.perimeter(p))


@given(point, point, point)
def test_point_pair_square_bound_holds(o, a, b):
    lhs, rhs = g.point_pair_square_bound(o, a, b)
    assert lhs >= rhs - 1e-12 * (1 + lhs)


@given(polygons, st.sampled_from([0.5, 3.0]))
def test_scaling_covariance(p, lam):
    q = Polygon(lam * p.vertices)
    assert g.perimeter(q) == pytest.approx(lam * g.perimeter(p), rel=1e-12, abs=1e-12)
    assert g.sum_pairwise_distances(q) == pytest.approx(lam * g.sum_pairwise_distances(p), rel=1e-12, abs=1e-12)
    assert g.sum_pairwise_squared_distances(q) == pytest.approx(
        lam ** 2 * g.sum_pairwise_squared_distances(p), rel=1e-12, abs=1e-12)


@given(st.lists(st.tuples(st.integers(-50, 50), st.integers(-50, 50)), min_size=3, max_size=9),
       st.sampled_from([0.5, 3.0]))
def test_predicates_scale_invariant(int_pts, lam):
    # integer-valued coordinates keep every determinant exact, so eps = 0 is an exact test
    p = Polygon(int_pts)
    q = Polygon(lam * p.vertices)
    assert g.is_simple(p, eps=0.0) == g.is_simple(q, eps=0.0)
    assert g.is_convex_position(p) == g.is_convex_position(q)


@given(polygons)
def test_normalize_idempotent(p):
    assume(g.perimeter(p) > 1e-6)
    once = g.normalize_to_unit_perimeter(p)
    twice = g.normalize_to_unit_perimeter(once)
    assert np.allclose(once.vertices, twice.vertices, atol=1e-12, rtol=0)
    assert g.perimeter(once) == pytest.approx(1.0, abs=1e-12)


@settings(max_examples=200)
@given(st.lists(point, min_size=3, max_size=10))
def test_unit_perimeter_bounds_respected(pts):
    from polyextrema import bounds
    p = Polygon(pts)
    assume(g.perimeter(p) > 1e-6)
    q = g.normalize_to_unit_perimeter(p)
    n = q.n
    assert g.sum_pairwise_distances(q) >= n / 4 - 1e-12
    assert g.sum_pairwise_distances(q) <= bounds.S_max(n) + 1e-12
    assert g.sum_pairwise_squared_distances(q) >= 1 / 8 - 1e-12
    assert g.sum_pairwise_squared_distances(q) <= bounds.T_max(n) + 1e-12
