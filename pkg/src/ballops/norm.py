"""Normed planes whose unit ball is an origin-symmetric convex polygon."""

from dataclasses import dataclass

from .errors import NegativeRadius, NotAPolygon, NotSymmetric, OriginNotInterior, PointNotOnSphere
from .kernel import (
    INTERIOR,
    POINT,
    POLYGON,
    ConvexRegion,
    HalfPlane,
    Point,
    contains,
    convex_hull,
    orient,
)
from .scalar import ONE, ZERO, as_scalar

POSITIVE = "positive"
NEGATIVE = "negative"


@dataclass(frozen=True)
class NormedPlane:
    unit_ball: ConvexRegion
    facets: tuple  # HalfPlane(a, 1) per edge, so gauge(v) = max a.v

    @property
    def vertex_count(self):
        return len(self.unit_ball.vertices)

    @property
    def normals(self):
        return [h.normal for h in self.facets]


@dataclass(frozen=True)
class Ball:
    center: Point
    radius: object
    region: ConvexRegion


def validate_plane(polygon):
    """Build a :class:`NormedPlane` from a polygon or a list of vertices."""
    if not isinstance(polygon, ConvexRegion):
        polygon = convex_hull(polygon)
    if polygon.kind != POLYGON:
        raise NotAPolygon(f"unit ball must be a polygon, got a {polygon.kind}")
    origin = Point(ZERO, ZERO)
    if not contains(polygon, origin, INTERIOR):
        raise OriginNotInterior("the origin must be an interior point of the unit ball")
    verts = set(polygon.vertices)
    for v in polygon.vertices:
        if -v not in verts:
            raise NotSymmetric(f"vertex {v} has no antipodal vertex")
    vs = polygon.vertices
    facets = []
    for i, a in enumerate(vs):
        b = vs[(i + 1) % len(vs)]
        n = Point(b.y - a.y, a.x - b.x)
        h = n.dot(a)
        facets.append(HalfPlane(n / h, ONE))
    return NormedPlane(polygon, tuple(facets))


def gauge(plane, v):
    """Minkowski functional of the unit ball; exact."""
    return max(h.normal.x * v.x + h.normal.y * v.y for h in plane.facets)


def dist(plane, p, q):
    return gauge(plane, p - q)


def ball(plane, x, radius):
    radius = as_scalar(radius)
    if radius < 0:
        raise NegativeRadius(f"radius {radius} < 0")
    if radius == 0:
        return Ball(x, radius, ConvexRegion(POINT, (x,)))
    verts = tuple(x + v * radius for v in plane.unit_ball.vertices)
    return Ball(x, radius, ConvexRegion(POLYGON, verts))


def ball_halfplanes(plane, x, radius):
    return [HalfPlane(h.normal, radius + h.normal.dot(x)) for h in plane.facets]


def sphere_position(region, p):
    """Boundary parameter ``i + t`` of ``p`` (edge ``i``, ``0 <= t < 1``), or None."""
    vs = region.vertices
    n = len(vs)
    for i in range(n):
        a, b = vs[i], vs[(i + 1) % n]
        if orient(a, b, p) != 0:
            continue
        d = b - a
        t = (p - a).dot(d) / d.dot(d)
        if 0 <= t < 1:
            return i + t
    return None


def _require_on_sphere(b, p):
    if b.radius <= 0:
        raise PointNotOnSphere("sphere of a radius-0 ball is degenerate")
    pos = sphere_position(b.region, p)
    if pos is None:
        raise PointNotOnSphere(f"{p} is not on the sphere of radius {b.radius} at {b.center}")
    return pos


def sphere_path(b, start, end, orientation=POSITIVE):
    """Polyline along the sphere of ``b`` from ``start`` to ``end``."""
    p0 = _require_on_sphere(b, start)
    p1 = _require_on_sphere(b, end)
    if start == end:
        return [start]
    vs = b.region.vertices
    n = len(vs)
    if orientation == POSITIVE:
        ahead = lambda pos: (pos - p0) % n
    elif orientation == NEGATIVE:
        ahead = lambda pos: (p0 - pos) % n
    else:
        raise ValueError(f"unknown orientation {orientation!r}")
    limit = ahead(p1)
    inner = [(ahead(k), vs[k]) for k in range(n) if 0 < ahead(k) < limit]
    inner.sort(key=lambda item: item[0])
    return [start] + [v for _, v in inner] + [end]


def is_extreme_point_of_ball(b, p):
    _require_on_sphere(b, p)
    return p in b.region.vertices


def on_sphere(plane, b, p):
    return b.radius > 0 and gauge(plane, p - b.center) == b.radius
