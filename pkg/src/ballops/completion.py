"""Completeness tests and greedy completions.

A completion is grown by adding vertices of ``bi(K_n, diam K)``.  Every such
point keeps the diameter unchanged, so the construction is exact at each
step; ``epsilon`` only decides when to stop if the loop does not close.
"""

import random
from dataclasses import dataclass

from .kernel import POINT, contains, convex_hull, intersect_regions
from .lp import region_distance
from .norm import ball, gauge
from .operators import _ball_intersection_region, diameter
from .scalar import ZERO, as_scalar

MAX_ROUNDS = 64


@dataclass(frozen=True)
class CompletionResult:
    region: object
    epsilon: object  # Hausdorff gap between region and its ball intersection
    rounds: int
    seed: int
    exact: bool = False


def _diam_of(plane, pts):
    best = ZERO
    for i, p in enumerate(pts):
        for q in pts[i + 1:]:
            best = max(best, gauge(plane, p - q))
    return best


def is_complete(P, plane):
    if P.kind == POINT:
        return True
    d = _diam_of(plane, P.vertices)
    return _ball_intersection_region(plane, P.vertices, d) == P


def default_epsilon(diam):
    return diam / 2 ** 16


def _admissible(plane, pts, y, d, limit=None):
    if any(gauge(plane, y - p) > d for p in pts):
        return False
    return limit is None or contains(limit, y)


def _grow(K, eps, seed, limit=None, max_rounds=MAX_ROUNDS):
    plane = K.plane
    d, _ = diameter(K)
    eps = default_epsilon(d) if eps is None else as_scalar(eps)
    rng = random.Random(seed)
    hull = convex_hull(K.points)
    pts = list(hull.vertices)
    rounds = 0
    while True:
        bi = _ball_intersection_region(plane, pts, d)
        if bi == hull:
            return CompletionResult(hull, ZERO, rounds, seed, True), True
        # hull lies inside bi, so the gap is the farthest bi vertex from hull
        far = {v: region_distance(plane, v, hull) for v in bi.vertices}
        gap = max(far.values())
        if gap <= eps:
            return CompletionResult(hull, gap, rounds, seed, False), True
        if rounds >= max_rounds:
            return CompletionResult(hull, gap, rounds, seed, False), False
        if limit is None:
            cands = [v for v in bi.vertices if far[v] > 0]
        else:
            pool = intersect_regions(bi, limit)
            cands = [v for v in pool.vertices if not contains(hull, v)]
        if not cands:
            return CompletionResult(hull, gap, rounds, seed, False), False
        rng.shuffle(cands)
        cands.sort(key=lambda v: far[v] if v in far else region_distance(plane, v, hull), reverse=True)
        for y in cands:
            if _admissible(plane, pts, y, d, limit):
                pts.append(y)
        hull = convex_hull(pts)
        pts = list(hull.vertices)
        rounds += 1


def complete_greedy(K, eps=None, seed=0, max_rounds=MAX_ROUNDS):
    """Greedy completion of ``K``; ``exact`` tells whether the loop closed."""
    return _grow(K, eps, seed, max_rounds=max_rounds)[0]


def complete_in_ball(K, x, lam, eps=None, seed=0, max_rounds=MAX_ROUNDS):
    """Greedy completion kept inside ``B(x, lam)``; None when it stalls."""
    lam = as_scalar(lam)
    limit = ball(K.plane, x, lam).region
    if not all(contains(limit, p) for p in K.points):
        return None
    result, ok = _grow(K, eps, seed, limit, max_rounds)
    return result if ok else None


def sample_completions(K, n, eps=None, seed=0):
    out = []
    for i in range(n):
        res = complete_greedy(K, eps, seed + i)
        if all(r.region != res.region for r in out):
            out.append(res)
    return out
