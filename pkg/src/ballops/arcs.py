"""Minimal arcs, the arc-hull description of the ball hull, and the pivot walk.

Both constructions work at radius 1 after scaling ``K`` to diameter 1 and
scale their results back, so outputs are in the caller's coordinates.
"""

from dataclasses import dataclass
from functools import cmp_to_key

from .errors import CoincidentPoints, InvariantBreach, PointsTooFar
from .kernel import (
    POLYGON,
    ConvexRegion,
    HalfPlane,
    Point,
    boundary_components,
    convex_hull,
    edges,
    midpoint,
)
from .lp import chebyshev_radius
from .norm import NEGATIVE, POSITIVE, ball, gauge, sphere_path, sphere_position
from .operators import _ball_intersection_region, diameter
from .scalar import ONE, ZERO, as_scalar


@dataclass(frozen=True)
class Arc:
    endpoints: tuple
    center: Point
    radius: object
    polyline: tuple
    side: HalfPlane  # closed half-plane of <p, q> away from the center

    def scaled(self, s):
        p, q = self.endpoints
        h = self.side
        return Arc((p * s, q * s), self.center * s, self.radius * s,
                   tuple(v * s for v in self.polyline), HalfPlane(h.normal, h.offset * s))


def _far_side(p, q, center):
    d = q - p
    m = Point(-d.y, d.x)
    if m.dot(center - p) < 0:
        m = -m
    return HalfPlane(m, m.dot(p))


def _arc_for_center(plane, p, q, lam, center):
    side = _far_side(p, q, center)
    bx = ball(plane, center, lam)
    for orientation in (POSITIVE, NEGATIVE):
        path = sphere_path(bx, p, q, orientation)
        if all(side.value(v) <= 0 for v in path):
            return Arc((p, q), center, lam, tuple(path), side)
    raise InvariantBreach(f"no far-side arc between {p} and {q} around {center}")


def minimal_arcs(plane, p, q, lam):
    """The (one or two) minimal arcs of radius ``lam`` meeting ``p`` and ``q``."""
    lam = as_scalar(lam)
    if p == q:
        raise CoincidentPoints("minimal arcs need two distinct points")
    if gauge(plane, p - q) > lam:
        raise PointsTooFar(f"gauge distance {gauge(plane, p - q)} exceeds radius {lam}")
    comps = boundary_components(ball(plane, p, lam).region, ball(plane, q, lam).region)
    arcs = []
    for c1, c2 in comps:
        arc = _arc_for_center(plane, p, q, lam, midpoint(c1, c2))
        if all(a.polyline != arc.polyline for a in arcs):
            arcs.append(arc)
    return arcs


def _normalized(K):
    diam, _ = diameter(K)
    return diam, [p / diam for p in K.points]


def arc_hull(K):
    """Convex hull of all pairwise minimal arcs at radius ``diam K``."""
    if len(K) == 1:
        return ConvexRegion("point", K.points), []
    diam, pts = _normalized(K)
    arcs = []
    verts = []
    for i, p in enumerate(pts):
        for q in pts[i + 1:]:
            for arc in minimal_arcs(K.plane, p, q, ONE):
                arcs.append(arc)
                verts.extend(arc.polyline)
    hull = convex_hull(verts).scale(diam)
    return hull, [a.scaled(diam) for a in arcs]


# --- pivot walk -----------------------------------------------------------

def _incident(plane, pts, z):
    return [q for q in pts if gauge(plane, z - q) == 1]


def _clockwise_step(plane, pivot, z):
    """Direction and next corner when moving clockwise on S(pivot, 1) from z."""
    region = ball(plane, pivot, ONE).region
    vs = region.vertices
    pos = sphere_position(region, z)
    if pos is None:
        raise InvariantBreach(f"{z} left the sphere around {pivot}")
    i = int(pos)
    if pos == i:
        corner = vs[(i - 1) % len(vs)]
    else:
        corner = vs[i]
    return corner - z, corner


def _keeps_inside(plane, incident, z, d):
    for q in incident:
        for h in plane.facets:
            a = h.normal
            if a.dot(z - q) == 1 and a.dot(d) > 0:
                return False
    return True


def _first_exit(plane, pts, z, e):
    """Smallest t in (0, 1] where moving along ``z + t e`` pushes a point out."""
    best = None
    for q in pts:
        w = z - q
        for h in plane.facets:
            a = h.normal
            slope = a.dot(e)
            if slope > 0:
                t = (1 - a.dot(w)) / slope
                if 0 < t <= 1 and (best is None or t < best):
                    best = t
    return best


def _cw_cmp_from(u):
    def key_class(w):
        c = u.cross(w)
        if c == 0:
            return 0 if u.dot(w) > 0 else 2
        return 1 if c < 0 else 3

    def cmp(w1, w2):
        k1, k2 = key_class(w1), key_class(w2)
        if k1 != k2:
            return -1 if k1 < k2 else 1
        c = w1.cross(w2)
        return 0 if c == 0 else (-1 if c < 0 else 1)

    return cmp


def _choose_pivot(plane, pts, z, current):
    incident = _incident(plane, pts, z)
    valid = [q for q in incident if _keeps_inside(plane, incident, z, _clockwise_step(plane, q, z)[0])]
    if not valid:
        raise InvariantBreach(f"pivot walk stuck at {z}")
    if current in valid:
        return current
    if current is None:
        return min(valid)
    # ties: the point reached last going clockwise from the current pivot,
    # i.e. the one closing the largest arc on S(z, 1)
    cmp = _cw_cmp_from(current - z)
    return max(valid, key=lambda q: cmp_to_key(cmp)(q - z))


def _drop_redundant(plane, pts, centers, region):
    if len(centers) <= 1:
        return centers
    order = sorted(range(len(centers)), key=lambda i: (len(_incident(plane, pts, centers[i])), i))
    keep = set(range(len(centers)))
    if region.kind == POLYGON:
        support = []
        for e0, e1 in edges(region):
            sup = set()
            for i, x in enumerate(centers):
                if any(h.normal.dot(e0 - x) == 1 and h.normal.dot(e1 - x) == 1 for h in plane.facets):
                    sup.add(i)
            support.append(sup)
        for i in order:
            if all(len(sup & keep) > 1 or i not in sup for sup in support):
                keep.discard(i)
    else:
        for i in order:
            trial = [centers[j] for j in sorted(keep) if j != i]
            if trial and _ball_intersection_region(plane, trial, ONE) == region:
                keep.discard(i)
    return [centers[i] for i in sorted(keep)]


def _walk(plane, pts):
    lam_k, c = chebyshev_radius(plane, pts)
    if lam_k >= 1:
        raise InvariantBreach("Chebyshev radius not below the diameter")
    # shoot from the Chebyshev center to the boundary of the center region
    d = Point(ONE, ZERO)
    t_hit = None
    for q in pts:
        for h in plane.facets:
            slope = h.normal.dot(d)
            if slope > 0:
                t = (1 - h.normal.dot(c - q)) / slope
                t_hit = t if t_hit is None or t < t_hit else t_hit
    z = c + d * t_hit
    pivot = _choose_pivot(plane, pts, z, None)

    def advance(z, pivot):
        e, corner = _clockwise_step(plane, pivot, z)
        t = _first_exit(plane, pts, z, e)
        nz = corner if t is None or t == 1 else z + e * t
        return nz, _choose_pivot(plane, pts, nz, pivot)

    z, new = advance(z, pivot)
    start = z
    stops = [z]
    trace = [(new, z)]
    pivot = new
    limit = 4 * (len(pts) + 2) * (len(plane.facets) + 2)
    for _ in range(limit):
        z, new = advance(z, pivot)
        if z == start:
            if len(trace) > 1 and trace[-1][0] == trace[0][0]:
                # the start fell inside the last pivot's stretch; the trace
                # is cyclic, so open it where that pivot really took over
                trace = [trace[-1]] + trace[1:-1]
            return stops, trace
        stops.append(z)
        if new != pivot:
            trace.append((new, z))
        pivot = new
    raise InvariantBreach("pivot walk did not close")


@dataclass(frozen=True)
class WalkResult:
    balls: tuple
    region: ConvexRegion
    trace: tuple
    corners: tuple  # every center visited, before redundancy pruning


def pivot_walk(K):
    """Supporting balls of ``bh(K)`` found by walking around the center region."""
    if len(K) == 1:
        p = K.points[0]
        return WalkResult((), ConvexRegion("point", (p,)), ((p, p),), ())
    diam, pts = _normalized(K)
    plane = K.plane
    stops, trace = _walk(plane, pts)
    region = _ball_intersection_region(plane, stops, ONE)
    kept = _drop_redundant(plane, pts, stops, region)
    balls = tuple(ball(plane, x * diam, diam) for x in kept)
    return WalkResult(
        balls,
        region.scale(diam),
        tuple((p * diam, x * diam) for p, x in trace),
        tuple(x * diam for x in stops),
    )
