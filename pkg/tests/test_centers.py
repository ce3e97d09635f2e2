import pytest

from ballops.centers import (
    base_system,
    ch_singleton_centrable,
    critical_set,
    degree_two_center,
    illumination_gap,
    inner_illuminating,
    is_global,
    verify_base_illuminates,
)
from ballops.errors import NotAChebyshevCenter, NotCentrable, PointNotOnBoundary
from ballops.kernel import POINT, SEGMENT, convex_hull, relint_contains
from ballops.norm import ball, gauge
from ballops.operators import PointSet, chebyshev_set, diameter, is_centrable
from ballops.random_instances import HEXAGON, named_plane
from ballops.scalar import Q

from conftest import L1, LINF, P, kset, pts

TRI = kset(LINF, (0, 0), (1, 0), (0, 1))
PAIR = kset(LINF, (0, 0), (1, 0))
UNIT_SQ = convex_hull(pts((0, 0), (1, 0), (1, 1), (0, 1)))
HEX_TRI = PointSet(named_plane(HEXAGON), pts((1, 0), (2, 0), (2, 1)))
# a non-centrable set whose Chebyshev set is a segment
SKEW = PointSet(named_plane([(-8, 5), (-7, 1), (-3, -8), (8, -5), (7, -1), (3, 8)]),
                pts((0, 0), (-5, -3), (-5, 2)))


def test_critical_set_examples():
    assert set(critical_set(TRI, P("1/2", "1/2")).critical_points) == set(TRI.points)
    assert set(critical_set(PAIR, P("1/2", "3/10")).critical_points) == set(PAIR.points)
    with pytest.raises(NotAChebyshevCenter):
        critical_set(PAIR, P(0, 0))


def test_base_system_examples():
    rep = base_system(TRI, P("1/2", "1/2"))
    assert rep.degree == 2 and set(rep.base_system) == set(pts((1, 0), (0, 1)))
    assert base_system(PAIR, P("1/2", "3/10")).degree is None
    rep = base_system(PAIR, P("1/2", 0))
    assert rep.degree == 2 and set(rep.base_system) == set(PAIR.points)


def test_base_system_report_invariants():
    for K in (TRI, PAIR, HEX_TRI):
        lam, ch = chebyshev_set(K)
        for x in ch.vertices:
            rep = base_system(K, x, lam)
            if rep.degree is None:
                continue
            assert len(rep.base_system) == rep.degree
            assert all(gauge(K.plane, t - x) == lam for t in rep.base_system)
            assert relint_contains(convex_hull(list(rep.base_system)), x)


def test_hexagonal_degree_three():
    lam, ch = chebyshev_set(HEX_TRI)
    assert not is_centrable(HEX_TRI)
    assert ch == convex_hull(pts(("5/3", "1/3")))
    rep = base_system(HEX_TRI, ch.vertices[0], lam)
    assert rep.degree == 3 and rep.diagnostic is None
    assert verify_base_illuminates(HEX_TRI, rep)
    assert relint_contains(convex_hull(list(HEX_TRI.points)), ch.vertices[0])


def test_singleton_criterion_examples():
    assert ch_singleton_centrable(kset(L1, (0, 0), (1, 0)))[0]
    assert not ch_singleton_centrable(PAIR)[0]
    ok, rep = ch_singleton_centrable(TRI)
    assert ok and set(rep.base_system) == set(pts((1, 0), (0, 1)))
    with pytest.raises(NotCentrable):
        ch_singleton_centrable(HEX_TRI)


def test_illumination_examples():
    assert inner_illuminating(pts(("1/2", 0), (0, "1/2"), (1, 1)), UNIT_SQ)
    assert not inner_illuminating(pts((0, 0), (1, 1)), UNIT_SQ)
    assert illumination_gap(pts((0, 0), (1, 1)), UNIT_SQ) in (P(1, 0), P(0, 1))
    assert not inner_illuminating(pts((0, 0)), UNIT_SQ)
    with pytest.raises(PointNotOnBoundary):
        inner_illuminating(pts(("1/2", "1/2")), UNIT_SQ)


def test_globality_examples():
    unit = ball(LINF, P(0, 0), 1)
    assert not is_global(pts((1, 1), (-1, -1)), unit)
    assert is_global(pts((1, 1), (-1, 1), (0, -1)), unit)
    assert not is_global(pts((1, 1)), unit)
    with pytest.raises(PointNotOnBoundary):
        is_global(pts((0, 0)), unit)


def test_opposite_edge_midpoints_illuminate():
    rep = base_system(PAIR, P("1/2", 0))
    assert verify_base_illuminates(PAIR, rep)


def test_opposite_corners_leave_a_vertex_unlit():
    # {(1,0),(0,1)} is a degree-2 base of (1/2,1/2), but from (0,0) both
    # segments run along edges of the square [0,1]^2
    rep = base_system(TRI, P("1/2", "1/2"))
    assert not verify_base_illuminates(TRI, rep)
    assert illumination_gap(rep.base_system, UNIT_SQ) == P(0, 0)


def test_l1_pair_base_leaves_a_vertex_unlit():
    # the diamond B((1/2,0),1/2) has the base points as opposite vertices
    K = kset(L1, (0, 0), (1, 0))
    rep = base_system(K, P("1/2", 0))
    assert rep.degree == 2 and not verify_base_illuminates(K, rep)
    assert illumination_gap(rep.base_system, ball(L1, P("1/2", 0), "1/2").region) in (P("1/2", "-1/2"), P("1/2", "1/2"))


def test_singleton_without_extreme_chord():
    # Ch is the point (1,1), yet no diametrical midpoint is a center at all
    K = kset(LINF, (0, 0), (2, 0), (1, 2))
    lam, ch = chebyshev_set(K)
    assert is_centrable(K, lam) and ch == convex_hull(pts((1, 1)))
    assert ch_singleton_centrable(K, lam)[0] is False


def test_non_centrable_set_without_pair_center():
    lam, ch = chebyshev_set(SKEW)
    d, _ = diameter(SKEW)
    assert (lam, d) == (Q(57, 118), Q(57, 59)) and ch.kind == SEGMENT
    assert is_centrable(SKEW, lam)
    assert degree_two_center(SKEW) is None


def test_degree_two_center_on_pair():
    x, pair = degree_two_center(PAIR)
    assert set(pair) == set(PAIR.points) and relint_contains(convex_hull(list(pair)), x)
    assert degree_two_center(HEX_TRI) is None
