import random

import pytest
from hypothesis import given
from hypothesis import strategies as st

from ballops.arcs import _arc_for_center, arc_hull, minimal_arcs, pivot_walk
from ballops.errors import CoincidentPoints, PointsTooFar
from ballops.kernel import INTERIOR, boundary_components, contains, convex_hull, midpoint, orient
from ballops.norm import ball, gauge
from ballops.operators import _ball_intersection_region, ball_hull, diameter
from ballops.random_instances import random_instance, random_plane
from ballops.scalar import Q

from conftest import L1, LINF, P, kset, pts

L1_QUAD = convex_hull(pts((0, 0), ("1/2", "1/2"), (1, 0), ("1/2", "-1/2")))


def test_minimal_arcs_l1():
    arcs = minimal_arcs(L1, P(0, 0), P(1, 0), 1)
    assert {a.center for a in arcs} == {P("1/2", "-1/2"), P("1/2", "1/2")}
    assert {a.polyline for a in arcs} == {tuple(pts((0, 0), ("1/2", "1/2"), (1, 0))),
                                          tuple(pts((0, 0), ("1/2", "-1/2"), (1, 0)))}


def test_minimal_arcs_linf_degenerate():
    arcs = minimal_arcs(LINF, P(0, 0), P(1, 0), 1)
    assert [a.polyline for a in arcs] == [tuple(pts((0, 0), (1, 0)))]


def test_minimal_arcs_errors():
    with pytest.raises(CoincidentPoints):
        minimal_arcs(LINF, P(0, 0), P(0, 0), 1)
    with pytest.raises(PointsTooFar):
        minimal_arcs(LINF, P(0, 0), P(3, 0), 1)


def test_arc_invariants():
    rng = random.Random(2)
    for _ in range(50):
        plane = random_plane(rng)
        p, q = P(0, 0), P(Q(rng.randint(-9, 9), 4), Q(rng.randint(-9, 9), 4))
        if p == q:
            continue
        for arc in minimal_arcs(plane, p, q, gauge(plane, q)):
            assert all(gauge(plane, v - arc.center) == arc.radius for v in arc.polyline)
            assert all(arc.side.value(v) <= 0 for v in arc.polyline)


def test_arc_hull_examples():
    assert arc_hull(kset(L1, (0, 0), (1, 0)))[0] == L1_QUAD
    assert arc_hull(kset(LINF, (0, 0), (1, 0)))[0] == convex_hull(pts((0, 0), (1, 0)))
    tri = kset(LINF, (0, 0), (1, 0), (0, 1))
    assert arc_hull(tri)[0] == ball_hull(tri, 1).region == convex_hull(pts((0, 0), (1, 0), (1, 1), (0, 1)))


def test_pivot_walk_examples():
    w = pivot_walk(kset(L1, (0, 0), (1, 0)))
    assert {b.center for b in w.balls} == {P("1/2", "1/2"), P("1/2", "-1/2")}
    assert w.region == L1_QUAD
    w = pivot_walk(kset(LINF, (0, 0), (1, 0)))
    assert w.region == convex_hull(pts((0, 0), (1, 0)))
    assert _ball_intersection_region(LINF, [b.center for b in w.balls], 1) == w.region
    assert sorted(p for p, _ in w.trace) == pts((0, 0), (1, 0))


@given(st.integers(0, 10 ** 6))
def test_three_way_equality(seed):
    K = random_instance(seed)
    bh = ball_hull(K, diameter(K)[0]).region
    assert arc_hull(K)[0] == bh
    w = pivot_walk(K)
    assert w.region == bh
    d = diameter(K)[0]
    assert _ball_intersection_region(K.plane, [b.center for b in w.balls], d) == bh


def _rand_q(rng, n=12):
    return Q(rng.randint(-n, n), n)


@given(st.integers(0, 10 ** 6))
def test_arcs_stay_in_any_common_ball(seed):
    rng = random.Random(seed)
    plane = random_plane(rng)
    unit = ball(plane, P(0, 0), 1).region
    inside = [v for v in (P(_rand_q(rng), _rand_q(rng)) for _ in range(40)) if contains(unit, v)]
    if len(inside) < 2:
        return
    p, q = inside[0], inside[1]
    if p == q or gauge(plane, p - q) > 1:
        return
    for arc in minimal_arcs(plane, p, q, 1):
        assert all(contains(unit, v) for v in arc.polyline)


@given(st.integers(0, 10 ** 6), st.integers(0, 10 ** 6))
def test_enclosing_balls_absorb_arcs(seed, pick):
    K = random_instance(seed)
    d = diameter(K)[0]
    if d == 0:
        return
    region = _ball_intersection_region(K.plane, K.points, d)
    x = region.vertices[pick % len(region.vertices)]
    cover = ball(K.plane, x, d).region
    for arc in arc_hull(K)[1]:
        assert all(contains(cover, v) for v in arc.polyline)


def test_non_crossing_triples():
    rng = random.Random(9)
    checked = 0
    for _ in range(3000):
        plane = random_plane(rng)
        a, b, c = (P(_rand_q(rng, 6), _rand_q(rng, 6)) for _ in range(3))
        if orient(a, b, c) == 0 or max(gauge(plane, a - b), gauge(plane, b - c), gauge(plane, a - c)) > 1:
            continue
        for x12 in minimal_arcs(plane, a, b, 1):
            if not contains(ball(plane, x12.center, 1).region, c, INTERIOR):
                continue
            for x23 in minimal_arcs(plane, b, c, 1):
                if not contains(ball(plane, x23.center, 1).region, a, INTERIOR):
                    continue
                checked += 1
                assert not contains(convex_hull(list(x23.polyline)), a)
                assert not contains(convex_hull(list(x12.polyline)), c)
    assert checked >= 20


def _simplified(path):
    out = [path[0]]
    for v in path[1:]:
        if len(out) >= 2 and orient(out[-2], out[-1], v) == 0:
            out[-1] = v
        elif v != out[-1]:
            out.append(v)
    return tuple(out)


def test_component_representative_does_not_matter():
    rng = random.Random(4)
    segments = 0
    for plane in [LINF, L1] + [random_plane(rng) for _ in range(300)]:
        p = P(0, 0)
        q = P(_rand_q(rng, 5), _rand_q(rng, 5))
        if q == p:
            continue
        lam = gauge(plane, q) * Q(rng.randint(10, 20), 10)
        comps = boundary_components(ball(plane, p, lam).region, ball(plane, q, lam).region)
        for c1, c2 in comps:
            if c1 == c2:
                continue
            segments += 1
            ref = _simplified(_arc_for_center(plane, p, q, lam, midpoint(c1, c2)).polyline)
            for c in (c1, c2):
                assert _simplified(_arc_for_center(plane, p, q, lam, c).polyline) == ref
    assert segments >= 10
