"""Critical sets, base systems and the illumination and globality tests.

Base systems are searched among the points of ``K`` first.  When no pair of
points of ``K`` works, pairs of critical points of ``conv K`` are tried,
because for polygonal norms such points may sit inside edges of ``conv K``.
A base found that way carries a diagnostic.
"""

from dataclasses import dataclass
from itertools import combinations

from .errors import Infeasible, NotAChebyshevCenter, NotCentrable, PointNotOnBoundary
from .kernel import (
    POINT,
    POLYGON,
    INTERIOR,
    Point,
    _distinct_directions,
    _positively_spanning,
    contains,
    convex_hull,
    edges,
    midpoint,
    on_boundary,
    orient,
    region_halfplanes,
    relint_contains,
    segment_intersection,
)
from .lp import LinearProgram, chebyshev_radius, solve_lp
from .norm import ball, gauge
from .operators import chebyshev_set, diameter, is_centrable
from .scalar import ZERO

CONV_HULL_BASE = "base uses critical points of conv(K) outside K"


@dataclass(frozen=True)
class CriticalReport:
    center: Point
    radius: object
    critical_points: tuple
    degree: int = None
    base_system: tuple = None
    diagnostic: str = None


def critical_set(K, x, radius=None):
    lam = radius if radius is not None else chebyshev_radius(K.plane, K)[0]
    dists = [gauge(K.plane, p - x) for p in K.points]
    if max(dists) != lam:
        raise NotAChebyshevCenter(f"{x} is at distance {max(dists)} from K, Chebyshev radius is {lam}")
    crit = tuple(p for p, d in zip(K.points, dists) if d == lam)
    return CriticalReport(x, lam, crit)


def _in_open_segment(a, b, x):
    return a != b and relint_contains(convex_hull([a, b]), x)


def _in_open_triangle(a, b, c, x):
    if orient(a, b, c) == 0:
        return False
    return contains(convex_hull([a, b, c]), x, INTERIOR)


def _hull_critical_pieces(K, x, lam):
    """``conv K`` intersected with the sphere ``S(x, lam)``, as closed segments."""
    hull = convex_hull(K.points)
    sphere = ball(K.plane, x, lam).region
    if hull.kind == POINT:
        p = hull.vertices[0]
        return [(p, p)] if gauge(K.plane, p - x) == lam else []
    pieces = []
    for a, b in edges(hull):
        for c, d in edges(sphere):
            hit = segment_intersection(a, b, c, d)
            if hit is not None:
                pieces.append(hit)
    return pieces


def _hull_pair(K, x, lam):
    pieces = _hull_critical_pieces(K, x, lam)
    for a, b in pieces:
        for c, d in pieces:
            hit = segment_intersection(a, b, x * 2 - c, x * 2 - d)
            if hit is not None and hit[0] != x:
                t = hit[0]
                return tuple(sorted((t, x * 2 - t)))
    return None


def base_system(K, x, radius=None):
    """Smallest base system of ``x``, or a report with ``degree=None``."""
    rep = critical_set(K, x, radius)
    crit = sorted(rep.critical_points)
    for a, b in combinations(crit, 2):
        if _in_open_segment(a, b, x):
            return CriticalReport(x, rep.radius, rep.critical_points, 2, (a, b))
    if rep.radius > 0:
        pair = _hull_pair(K, x, rep.radius)
        if pair is not None:
            return CriticalReport(x, rep.radius, rep.critical_points, 2, pair, CONV_HULL_BASE)
    for a, b, c in combinations(crit, 3):
        if _in_open_triangle(a, b, c, x):
            return CriticalReport(x, rep.radius, rep.critical_points, 3, (a, b, c))
    return rep


def degree_two_center(K, seed=0):
    """A Chebyshev center with a two-point base in ``conv K``, or None.

    Decided exactly by one small LP per unit-ball facet: find ``t1, t2`` in
    ``conv K`` with midpoint in ``Ch(K)`` and ``a.(t1 - t2) >= 2 lam_K``.
    """
    lam, ch = chebyshev_set(K)
    if lam == 0:
        return None
    hull = convex_hull(K.points)
    lo, hi = hull.bbox()
    bounds = [(lo.x, hi.x), (lo.y, hi.y), (lo.x, hi.x), (lo.y, hi.y)]
    cons = []
    for h in region_halfplanes(hull):
        n = h.normal
        cons.append(((n.x, n.y, ZERO, ZERO), h.offset))
        cons.append(((ZERO, ZERO, n.x, n.y), h.offset))
    for h in region_halfplanes(ch):
        n = h.normal
        cons.append(((n.x, n.y, n.x, n.y), h.offset * 2))
    for f in K.plane.facets:
        a = f.normal
        extra = ((-a.x, -a.y, a.x, a.y), -2 * lam)
        try:
            _, z = solve_lp(LinearProgram((ZERO,) * 4, cons + [extra], bounds), seed=seed)
        except Infeasible:
            continue
        t1, t2 = Point(z[0], z[1]), Point(z[2], z[3])
        return midpoint(t1, t2), (t1, t2)
    return None


def ch_singleton_centrable(K, radius=None):
    """Whether some diametrical chord has its midpoint at a ball vertex direction."""
    lam = radius if radius is not None else chebyshev_radius(K.plane, K)[0]
    if not is_centrable(K, lam):
        raise NotCentrable("K is not centrable")
    diam, _ = diameter(K)
    unit = set(K.plane.unit_ball.vertices)
    pts = sorted(K.points)
    for p, q in combinations(pts, 2):
        if gauge(K.plane, p - q) != diam:
            continue
        x = midpoint(p, q)
        if max(gauge(K.plane, k - x) for k in pts) != lam:
            continue
        if (p - x) / lam in unit:
            rep = critical_set(K, x, lam)
            return True, CriticalReport(x, lam, rep.critical_points, 2, (p, q))
    return False, None


def _require_boundary(P, region):
    for p in P:
        if not on_boundary(region, p):
            raise PointNotOnBoundary(f"{p} is not on the boundary")


def illumination_gap(P, C):
    """A boundary point of ``C`` that no point of ``P`` illuminates, or None."""
    if C.kind != POLYGON:
        raise ValueError("illumination needs a polygon")
    _require_boundary(P, C)
    probes = list(C.vertices) + [midpoint(a, b) for a, b in edges(C)]
    for y in probes:
        if not any(contains(C, midpoint(p, y), INTERIOR) for p in P):
            return y
    return None


def inner_illuminating(P, C):
    return illumination_gap(P, C) is None


def is_global(P, C):
    """True iff ``P`` lies in no closed half-plane bounded by a line through the center."""
    _require_boundary(P, C.region)
    dirs = _distinct_directions([p - C.center for p in P])
    return _positively_spanning(dirs)


def verify_base_illuminates(K, report):
    b = ball(K.plane, report.center, report.radius)
    ok = inner_illuminating(report.base_system, b.region)
    if report.degree == 3:
        ok = ok and is_global(report.critical_points, b)
    return ok
