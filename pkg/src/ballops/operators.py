"""Diameter, ball intersection, ball hull and the Chebyshev set of finite sets.

The intersection of radius-``lam`` balls centred at the points of ``K`` has
one supporting half-plane per unit-ball facet ``a``:  ``a.z <= lam + min a.p``.
The ball hull intersects the balls centred at the vertices of that region,
which is exact because ``x -> gauge(z - x)`` is convex.
"""

from dataclasses import dataclass

from .errors import EmptyInput, InvariantBreach, RadiusTooSmall
from .kernel import EMPTY_REGION, HalfPlane, clip_all, convex_hull
from .lp import chebyshev_radius
from .norm import ball, gauge
from .scalar import ZERO, as_scalar


class PointSet:
    """Finite, non-empty, duplicate-free point set in a normed plane."""

    def __init__(self, plane, points):
        seen = set()
        pts = []
        for p in points:
            if p not in seen:
                seen.add(p)
                pts.append(p)
        if not pts:
            raise EmptyInput("point set is empty")
        self.plane = plane
        self.points = tuple(pts)

    def __len__(self):
        return len(self.points)

    def __iter__(self):
        return iter(self.points)

    def __repr__(self):
        return f"PointSet({list(self.points)!r})"

    def with_points(self, points):
        return PointSet(self.plane, points)


@dataclass(frozen=True)
class BallOpResult:
    region: object
    lambda_used: object
    supporting_centers: tuple


def as_pointset(plane, K):
    return K if isinstance(K, PointSet) else PointSet(plane, K)


def diameter(K):
    """Exact diameter and one diametrical pair."""
    pts = K.points
    best, pair = ZERO, (pts[0], pts[0])
    for i, p in enumerate(pts):
        for q in pts[i + 1:]:
            d = gauge(K.plane, p - q)
            if d > best:
                best, pair = d, (p, q)
    return best, pair


def intersection_halfplanes(plane, centers, lam):
    return [HalfPlane(h.normal, lam + min(h.normal.dot(p) for p in centers)) for h in plane.facets]


def _ball_intersection_region(plane, centers, lam):
    start = ball(plane, centers[0], lam).region.vertices
    return convex_hull(clip_all(start, intersection_halfplanes(plane, centers, lam)))


def _supporting(plane, centers, region, lam):
    return tuple(p for p in centers if any(gauge(plane, v - p) == lam for v in region.vertices))


def ball_intersection(K, lam):
    lam = as_scalar(lam)
    region = _ball_intersection_region(K.plane, K.points, lam)
    if region.is_empty:
        return BallOpResult(EMPTY_REGION, lam, ())
    return BallOpResult(region, lam, _supporting(K.plane, K.points, region, lam))


def ball_hull(K, lam, radius=None):
    """``bh(K, lam)``; ``radius`` may pass a precomputed Chebyshev radius."""
    lam = as_scalar(lam)
    lam_k = radius if radius is not None else chebyshev_radius(K.plane, K)[0]
    if lam < lam_k:
        raise RadiusTooSmall(f"radius {lam} is below the Chebyshev radius {lam_k}")
    centers = _ball_intersection_region(K.plane, K.points, lam).vertices
    if not centers:
        raise InvariantBreach("empty ball intersection at a radius >= the Chebyshev radius")
    region = _ball_intersection_region(K.plane, centers, lam)
    return BallOpResult(region, lam, _supporting(K.plane, centers, region, lam))


def chebyshev_set(K):
    """Chebyshev radius and the exact set of Chebyshev centers."""
    lam_k, _ = chebyshev_radius(K.plane, K)
    region = _ball_intersection_region(K.plane, K.points, lam_k)
    if region.is_empty:
        raise InvariantBreach("Chebyshev set came out empty")
    return lam_k, region


def is_centrable(K, radius=None):
    lam_k = radius if radius is not None else chebyshev_radius(K.plane, K)[0]
    return diameter(K)[0] == 2 * lam_k
