import pytest
from hypothesis import given

from ballops.errors import NegativeRadius, NotAPolygon, NotSymmetric, OriginNotInterior, PointNotOnSphere
from ballops.kernel import INTERIOR, POINT, contains, convex_hull
from ballops.norm import NEGATIVE, POSITIVE, ball, gauge, is_extreme_point_of_ball, sphere_path, validate_plane

from conftest import HEX, L1, LINF, OCT, P, planes, points, pts, rationals

ORIGIN = P(0, 0)


def test_validate_plane():
    assert validate_plane(pts((1, 1), (-1, 1), (-1, -1), (1, -1))).vertex_count == 4
    assert validate_plane(pts((1, 0), (0, 1), (-1, 0), (0, -1))).vertex_count == 4
    with pytest.raises(NotSymmetric):
        validate_plane(pts((0, 1), (1, -1), (-1, -1)))
    with pytest.raises(OriginNotInterior):
        validate_plane(pts((1, 1), (2, 1), (2, 2), (1, 2)))
    with pytest.raises(NotAPolygon):
        validate_plane(pts((-1, 0), (1, 0)))


def test_gauge_examples():
    assert gauge(LINF, P(3, -2)) == 3
    assert gauge(LINF, P(1, 1)) == 1
    assert gauge(L1, P(3, -2)) == 5
    for plane in (LINF, L1, HEX, OCT):
        assert gauge(plane, ORIGIN) == 0


@given(planes, points)
def test_gauge_puts_v_on_its_sphere(plane, v):
    # independent of the facet formula: region membership of the scaled ball
    g = gauge(plane, v)
    if g == 0:
        assert v == ORIGIN
        return
    region = ball(plane, ORIGIN, g).region
    assert contains(region, v) and not contains(region, v, INTERIOR)


@given(planes, points, rationals)
def test_homogeneity(plane, v, t):
    assert gauge(plane, v * t) == abs(t) * gauge(plane, v)


@given(planes, points, points)
def test_triangle_inequality_and_symmetry(plane, u, v):
    assert gauge(plane, u + v) <= gauge(plane, u) + gauge(plane, v)
    assert gauge(plane, u - v) == gauge(plane, v - u)


@given(planes, points, points, rationals)
def test_ball_matches_gauge(plane, x, p, lam):
    lam = abs(lam)
    assert contains(ball(plane, x, lam).region, p) == (gauge(plane, p - x) <= lam)


def test_ball_examples():
    assert ball(LINF, ORIGIN, 1).region == convex_hull(pts((-1, -1), (1, -1), (1, 1), (-1, 1)))
    assert ball(L1, P(1, 0), 1).region == convex_hull(pts((2, 0), (1, 1), (0, 0), (1, -1)))
    assert ball(HEX, P(3, 4), 0).region.kind == POINT
    with pytest.raises(NegativeRadius):
        ball(LINF, ORIGIN, -1)


def test_sphere_path():
    b = ball(LINF, ORIGIN, 1)
    assert sphere_path(b, P(1, 0), P(0, 1), POSITIVE) == pts((1, 0), (1, 1), (0, 1))
    assert sphere_path(b, P(1, 0), P(0, 1), NEGATIVE) == pts((1, 0), (1, -1), (-1, -1), (-1, 1), (0, 1))
    assert sphere_path(b, P(1, 0), P(1, 0)) == [P(1, 0)]
    with pytest.raises(PointNotOnSphere):
        sphere_path(b, P(0, 0), P(1, 0))


def test_extreme_points():
    assert is_extreme_point_of_ball(ball(LINF, P("1/2", "1/2"), "1/2"), P(1, 0))
    assert not is_extreme_point_of_ball(ball(LINF, P("1/2", 0), "1/2"), P(1, 0))
    assert is_extreme_point_of_ball(ball(L1, P(1, 0), 1), P(2, 0))
    with pytest.raises(PointNotOnSphere):
        is_extreme_point_of_ball(ball(L1, P(1, 0), 1), P(1, 0))
