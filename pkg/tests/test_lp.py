import os
import random
import subprocess
import sys

import pytest
from hypothesis import given
from hypothesis import strategies as st

from ballops.errors import EmptyInput, Infeasible, Unbounded
from ballops.kernel import convex_hull
from ballops.lp import (
    LinearProgram,
    chebyshev_radius,
    gauge_hausdorff,
    region_distance,
    region_distance_lp,
    solve_lp,
)
from ballops.norm import gauge
from ballops.operators import ball_intersection, diameter
from ballops.random_instances import random_instance

from conftest import L1, LINF, P, planes, points, pts
from ballops.scalar import Q


def test_one_dimensional():
    value, z = solve_lp(LinearProgram((1,), [((-1,), -1), ((-1,), -2)]))
    assert value == 2 and z == (2,)


def test_box_minimax():
    # minimize t with |x - p| <= t and |y| <= t for p in {0, 1}
    cons = [((1, 0, -1), 0), ((-1, 0, -1), 0), ((1, 0, -1), 1), ((-1, 0, -1), -1),
            ((0, 1, -1), 0), ((0, -1, -1), 0)]
    value, _ = solve_lp(LinearProgram((0, 0, 1), cons))
    assert value == Q(1, 2)


def test_infeasible_and_unbounded():
    with pytest.raises(Infeasible):
        solve_lp(LinearProgram((1,), [((1,), 0), ((-1,), -1)]))
    with pytest.raises(Unbounded):
        solve_lp(LinearProgram((1, 0), [((1, 0), 1)]))


def test_dimension_limit():
    with pytest.raises(ValueError):
        LinearProgram((1, 1, 1, 1, 1), [])


@given(st.integers(0, 10 ** 6))
def test_seed_does_not_change_value(seed):
    rng = random.Random(seed)
    cons = [((rng.randint(-5, 5), rng.randint(-5, 5), -1), rng.randint(-9, 9)) for _ in range(8)]
    cons += [((1, 0, 0), 50), ((-1, 0, 0), 50), ((0, 1, 0), 50), ((0, -1, 0), 50)]
    lp = LinearProgram((0, 0, 1), cons)
    values = {solve_lp(lp, s)[0] for s in range(4)}
    assert len(values) == 1


def test_chebyshev_radius_examples():
    lam, c = chebyshev_radius(LINF, pts((0, 0), (1, 0), (0, 1)))
    assert (lam, c) == (Q(1, 2), P("1/2", "1/2"))
    assert chebyshev_radius(L1, pts((0, 0), (2, 0))) == (1, P(1, 0))
    assert chebyshev_radius(L1, pts((3, 4))) == (0, P(3, 4))
    with pytest.raises(EmptyInput):
        chebyshev_radius(L1, [])


@given(st.integers(0, 10 ** 6))
def test_witness_and_certificate(seed):
    K = random_instance(seed)
    lam, c = chebyshev_radius(K.plane, K.points, seed)
    assert max(gauge(K.plane, p - c) for p in K.points) == lam
    assert not ball_intersection(K, lam).region.is_empty
    assert ball_intersection(K, lam - lam / 2 ** 20).region.is_empty
    d, _ = diameter(K)
    assert lam <= d <= 2 * lam
    smaller = K.points[: max(1, len(K) // 2)]
    assert chebyshev_radius(K.plane, smaller)[0] <= lam


def test_region_distance_examples():
    sq = convex_hull(pts((0, 0), (1, 0), (1, 1), (0, 1)))
    assert region_distance(LINF, P(3, "1/2"), sq) == 2
    assert region_distance(LINF, P("1/2", "1/2"), sq) == 0
    assert gauge_hausdorff(LINF, sq, sq) == 0
    assert gauge_hausdorff(LINF, convex_hull(pts((0, 0))), convex_hull(pts((3, -2)))) == 3
    assert gauge_hausdorff(LINF, sq, convex_hull(pts((0, 0), (1, 0)))) == 1


@given(planes, points, st.lists(points, min_size=1, max_size=6))
def test_geometric_distance_matches_lp(plane, v, cloud):
    region = convex_hull(cloud)
    assert region_distance(plane, v, region) == region_distance_lp(plane, v, region)


def test_fraction_backend_gives_same_answers():
    code = ("from ballops.scalar import BACKEND; from ballops.random_instances import random_instance;"
            "from ballops import ball_hull, diameter; K = random_instance(3);"
            "print(BACKEND, ball_hull(K, diameter(K)[0]).region)")
    env = dict(os.environ, BALLOPS_RATIONAL="fraction")
    slow = subprocess.run([sys.executable, "-c", code], env=env, capture_output=True, text=True, check=True)
    fast = subprocess.run([sys.executable, "-c", code], capture_output=True, text=True, check=True)
    assert slow.stdout.split(" ", 1)[0] == "fraction"
    assert fast.stdout.split(" ", 1)[0] == "gmpy2"
    assert slow.stdout.split(" ", 1)[1] == fast.stdout.split(" ", 1)[1]
