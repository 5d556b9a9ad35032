import math

import numpy as np
import pytest

from polyextrema import bounds as b
from polyextrema import constructions as c
from polyextrema import geometry as g
from polyextrema.constructions import ConstructionSpec, Kind
from polyextrema.errors import BadEpsilon, BadN, BadRadius, BadSplit
from polyextrema.geometry import Polygon

EPSILONS = [10.0 ** -k for k in range(2, 9)]


def unit(p):
    return g.normalize_to_unit_perimeter(p)


def dup_limit(n):
    """Squared sum of the duplicated thrackle with the copy exactly on top of A_1."""
    base = c.star_thrackle(n - 1, c.unit_perimeter_thrackle_radius(n - 1)).vertices
    return g.sum_pairwise_squared_distances(unit(Polygon(np.vstack([base[:1], base]))))


FAMILIES = {
    "two_cluster_S": (lambda n, e: g.sum_pairwise_distances(unit(c.two_cluster(n, n // 2, e))),
                      b.S_max, [3, 5, 8, 12]),
    "two_cluster_T": (lambda n, e: g.sum_pairwise_squared_distances(unit(c.two_cluster(n, n // 2, e))),
                      b.T_max, [3, 5, 8, 12]),
    "alternating": (lambda n, e: g.sum_pairwise_distances(unit(c.alternating_collinear(n, e))),
                    lambda n: b.s_bounds(n)[1], [3, 4, 5, 8]),
    "simple_extremal_F": (lambda n, e: g.perimeter(c.simple_extremal_F(n, e)), b.F_max, [5, 7, 9, 15]),
    "near_diameter_zigzag": (lambda n, e: g.perimeter(c.near_diameter_zigzag(n, e)), lambda n: 2.0 * n,
                             [4, 6, 8, 12]),
    "duplicated_thrackle": (lambda n, e: g.sum_pairwise_squared_distances(unit(c.duplicated_star_thrackle(n, e))),
                            dup_limit, [4, 6, 10]),
}


@pytest.mark.parametrize("name", list(FAMILIES))
def test_first_order_convergence(name):
    value, target, ns = FAMILIES[name]
    for n in ns:
        t = target(n)
        for e in EPSILONS:
            gap, half_gap = abs(t - value(n, e)), abs(t - value(n, e / 2))
            # first order: each halving halves the gap, up to O(eps) curvature and rounding
            assert half_gap <= 0.5 * gap * (1 + e) + 1e-13, (n, e, gap, half_gap)


@pytest.mark.parametrize("n", range(3, 21))
def test_two_cluster_tightness(n):
    p = unit(c.two_cluster(n, n // 2, 1e-6))
    assert abs(g.sum_pairwise_distances(p) - b.S_max(n)) <= 1e-4
    assert abs(g.sum_pairwise_squared_distances(p) - b.T_max(n)) <= 1e-4


@pytest.mark.parametrize("n", [3, 4, 7, 10])
def test_two_cluster_convex_position(n):
    for k in range(1, n):
        assert g.is_convex_position(c.two_cluster(n, k, 1e-3))


def test_two_cluster_errors():
    with pytest.raises(BadSplit):
        c.two_cluster(5, 0, 1e-3)
    with pytest.raises(BadSplit):
        c.two_cluster(5, 5, 1e-3)
    with pytest.raises(BadEpsilon):
        c.two_cluster(5, 2, 0.0)
    with pytest.raises(BadN):
        c.two_cluster(2, 1, 1e-3)


@pytest.mark.parametrize("n", range(3, 30))
def test_alternating_exact(n):
    p = c.alternating_collinear(n, 0.0)
    assert g.perimeter(p) == pytest.approx(1.0, abs=1e-15)
    expected = n / 4 if n % 2 == 0 else (n + 1) / 4
    assert abs(g.sum_pairwise_distances(p) - expected) <= 1e-12
    if n % 2 == 0:
        assert abs(g.sum_pairwise_squared_distances(p) - 0.25) <= 1e-12
    else:
        assert g.sum_pairwise_squared_distances(p) == pytest.approx(b.alternating_sum_squared(n), abs=1e-12)


@pytest.mark.parametrize("n", [3, 5, 7, 21, 199])
def test_star_thrackle(n):
    p = c.star_thrackle(n, 1.0)
    assert abs(g.perimeter(p) - b.G_max(n)) <= 1e-12
    assert np.allclose(p.edge_lengths(), 2 * math.cos(math.pi / (2 * n)), atol=1e-13)
    assert g.inside_unit_disk(p)
    if n >= 5:
        assert not g.is_simple(p)
        assert not g.is_convex_position(p)
    value = g.sum_pairwise_squared_distances(unit(p))
    assert abs(value - 0.25 / math.cos(math.pi / (2 * n)) ** 2) <= 1e-12


def test_star_thrackle_every_nonadjacent_pair_crosses():
    p = c.star_thrackle(7, 1.0)
    V = p.vertices
    n = p.n
    for i in range(n):
        for j in range(i + 2, n):
            if (i, j) == (0, n - 1):
                continue
            assert g.segments_intersect(V[i], V[(i + 1) % n], V[j], V[(j + 1) % n])


def test_trig_identity():
    for n in range(3, 200, 2):
        half = sum(math.sin(i * math.pi / n) ** 2 for i in range(1, (n - 1) // 2 + 1))
        assert half == pytest.approx(n / 4, abs=1e-12)
        full = sum(math.sin(i * math.pi / n) ** 2 for i in range(1, n))
        assert full == pytest.approx(n / 2, abs=1e-12)


def test_star_thrackle_errors():
    with pytest.raises(BadN):
        c.star_thrackle(6)
    with pytest.raises(BadRadius):
        c.star_thrackle(5, 0.0)


@pytest.mark.parametrize("n", range(3, 16, 2))
def test_simple_extremal_F(n):
    p = c.simple_extremal_F(n, 1e-6)
    assert abs(g.perimeter(p) - b.F_max(n)) <= 1e-4
    assert g.is_simple(p)
    assert g.inside_unit_disk(p)


@pytest.mark.parametrize("eps", [1e-1, 1e-2, 1e-4, 1e-8, 1e-10])
def test_simple_extremal_F_simple_for_all_eps(eps):
    for n in range(5, 26, 2):
        assert g.is_simple(c.simple_extremal_F(n, eps))


def test_cap_chord_in_long_chord_regime():
    for n in range(5, 1001, 2):
        z = 2 * math.sin(c.cap_half_angle(n))
        assert math.sqrt(3) <= z <= 2


def test_simple_extremal_F_errors():
    with pytest.raises(BadN):
        c.simple_extremal_F(6, 1e-3)
    with pytest.raises(BadEpsilon):
        c.simple_extremal_F(5, 0.0)


def test_near_diameter_zigzag():
    p = c.near_diameter_zigzag(4, 1e-3)
    assert g.perimeter(p) >= 8 - 0.1
    p = c.near_diameter_zigzag(6, 1e-6)
    assert abs(g.perimeter(p) - 12) <= 1e-3
    assert g.is_simple(p)
    for n in (4, 6, 8, 10, 20):
        for eps in (0.25, 1e-2, 1e-4, 1e-6, 1e-8):
            q = c.near_diameter_zigzag(n, eps)
            # the tip wedge is ~eps^1.5 high, below the default snapping scale for eps < 1e-7
            assert g.is_simple(q, eps=1e-12 if eps >= 1e-6 else 0.0)
            assert g.inside_unit_disk(q)
            assert q.edge_lengths().min() >= 2 - 2 * eps
    with pytest.raises(BadN):
        c.near_diameter_zigzag(5, 1e-3)
    with pytest.raises(BadEpsilon):
        c.near_diameter_zigzag(4, 0.5)


def test_duplicated_thrackle():
    p = c.duplicated_star_thrackle(6, 1e-4)
    assert p.n == 6
    assert g.perimeter(unit(p)) == pytest.approx(1.0)
    with pytest.raises(BadN):
        c.duplicated_star_thrackle(5, 1e-4)


def test_construction_spec():
    spec = ConstructionSpec(kind="two_cluster", n=6, epsilon=1e-5)
    assert spec.kind is Kind.TWO_CLUSTER
    assert spec.build().n == 6
    assert ConstructionSpec(Kind.ALTERNATING_COLLINEAR, 5, epsilon=0.0).build().n == 5
    assert ConstructionSpec(Kind.STAR_THRACKLE, 5).in_unit_disk
    assert not ConstructionSpec(Kind.STAR_THRACKLE, 5, radius=2.0).in_unit_disk
    assert ConstructionSpec(Kind.SIMPLE_EXTREMAL_F, 7).in_unit_disk
    for bad in (dict(kind="star_thrackle", n=4), dict(kind="simple_extremal_f", n=8),
                dict(kind="near_diameter_zigzag", n=7), dict(kind="two_cluster", n=5, cluster_split=5),
                dict(kind="two_cluster", n=5, epsilon=-1.0)):
        with pytest.raises(ValueError):
            ConstructionSpec(**bad)
