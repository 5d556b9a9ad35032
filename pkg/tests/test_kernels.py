import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from polyextrema import constructions as c
from polyextrema import geometry as g
from polyextrema.geometry import Polygon
from polyextrema.optimize import _kernels as K
from polyextrema.optimize.oracle import batch_is_simple

coord = st.floats(-3, 3, allow_nan=False, allow_infinity=False)
polys = st.lists(st.tuples(coord, coord), min_size=3, max_size=10).map(Polygon)
# small integer coordinates produce plenty of exactly collinear and touching cases
grid_polys = st.lists(st.tuples(st.integers(-3, 3), st.integers(-3, 3)), min_size=3, max_size=7).map(Polygon)


def flat(p):
    return np.ascontiguousarray(p.vertices, dtype=float).ravel().copy()


@given(polys)
def test_functionals_agree(p):
    x = flat(p)
    assert K.perimeter_k(x, p.n) == pytest.approx(g.perimeter(p), rel=1e-12, abs=1e-12)
    assert K.sumdist_k(x, p.n) == pytest.approx(g.sum_pairwise_distances(p), rel=1e-12, abs=1e-12)
    assert K.sumsq_k(x, p.n) == pytest.approx(g.sum_pairwise_squared_distances(p), rel=1e-12, abs=1e-12)


@settings(max_examples=300)
@given(st.one_of(polys, grid_polys))
def test_simplicity_predicates_agree(p):
    expected = g.is_simple(p)
    assert K.is_simple_k(flat(p), p.n, 1e-12) == expected
    assert batch_is_simple(p.vertices[None, :, :])[0] == expected


def test_simplicity_on_constructions():
    for p in (c.simple_extremal_F(9, 1e-4), c.near_diameter_zigzag(8, 1e-4), c.star_thrackle(7)):
        assert K.is_simple_k(flat(p), p.n, 1e-12) == g.is_simple(p)


@given(polys)
def test_projection_unit_perimeter(p):
    x = flat(p)
    ok = K.project_k(x, p.n, True, False)
    if g.perimeter(p) > 1e-300:
        assert ok
        assert K.perimeter_k(x, p.n) == pytest.approx(1.0, abs=1e-12)


@given(polys)
def test_projection_disk(p):
    x = flat(p)
    assert K.project_k(x, p.n, False, True)
    r = np.hypot(x[0::2], x[1::2])
    assert np.all(r <= 1.0 + 1e-15)
    inside = np.hypot(*p.vertices.T) <= 1.0
    assert np.array_equal(x.reshape(-1, 2)[inside], p.vertices[inside])


def test_projection_rejects_zero_perimeter():
    x = np.zeros(6)
    assert not K.project_k(x, 3, True, False)


def test_loss_marks_infeasible():
    bowtie = Polygon([(0, 0), (0.5, 0.5), (0.5, 0), (0, 0.5)])
    out = np.empty(8)
    assert K.loss_k(flat(bowtie), 4, K.PERIMETER, -1.0, False, True, True, 1e-12, out) == np.inf
    assert np.isfinite(K.loss_k(flat(bowtie), 4, K.PERIMETER, -1.0, False, True, False, 1e-12, out))
