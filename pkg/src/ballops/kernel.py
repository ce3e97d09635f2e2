"""Exact planar primitives: points, half-planes and canonical convex regions.

Every region is stored in canonical form (counter-clockwise, starting at the
lexicographically smallest vertex, no collinear or repeated vertices), so
two regions are equal exactly when their vertex tuples are equal.
"""

from dataclasses import dataclass
from functools import cmp_to_key
from typing import NamedTuple

from .errors import InputError, UnboundedRegion
from .scalar import HALF, ONE, ZERO, as_scalar, scalar_str

EMPTY = "empty"
POINT = "point"
SEGMENT = "segment"
POLYGON = "polygon"

CLOSED = "closed"
INTERIOR = "interior"


class Point(NamedTuple):
    x: object
    y: object

    def __add__(self, other):
        return Point(self.x + other.x, self.y + other.y)

    def __sub__(self, other):
        return Point(self.x - other.x, self.y - other.y)

    def __mul__(self, s):
        return Point(self.x * s, self.y * s)

    __rmul__ = __mul__

    def __truediv__(self, s):
        return Point(self.x / s, self.y / s)

    def __neg__(self):
        return Point(-self.x, -self.y)

    def dot(self, other):
        return self.x * other.x + self.y * other.y

    def cross(self, other):
        return self.x * other.y - self.y * other.x

    def __repr__(self):
        return f"Point({scalar_str(self.x)}, {scalar_str(self.y)})"


def point(x, y):
    return Point(as_scalar(x), as_scalar(y))


def midpoint(a, b):
    return Point((a.x + b.x) * HALF, (a.y + b.y) * HALF)


def orient(o, a, b):
    """Twice the signed area of triangle (o, a, b); > 0 for a left turn."""
    return (a.x - o.x) * (b.y - o.y) - (a.y - o.y) * (b.x - o.x)


class HalfPlane(NamedTuple):
    """The closed region ``normal . p <= offset``."""

    normal: Point
    offset: object

    def value(self, p):
        return self.normal.dot(p) - self.offset


def halfplane(a, b, c):
    n = point(a, b)
    if n.x == 0 and n.y == 0:
        raise InputError("half-plane normal must be non-zero")
    return HalfPlane(n, as_scalar(c))


@dataclass(frozen=True)
class ConvexRegion:
    kind: str
    vertices: tuple

    def __post_init__(self):
        expected = {EMPTY: 0, POINT: 1, SEGMENT: 2}
        n = len(self.vertices)
        if self.kind in expected:
            ok = n == expected[self.kind]
        else:
            ok = self.kind == POLYGON and n >= 3
        if not ok:
            raise ValueError(f"bad {self.kind} region with {n} vertices")

    @property
    def is_empty(self):
        return self.kind == EMPTY

    def __iter__(self):
        return iter(self.vertices)

    def __len__(self):
        return len(self.vertices)

    def translate(self, v):
        return ConvexRegion(self.kind, tuple(p + v for p in self.vertices))

    def scale(self, s):
        """Homothety about the origin; ``s`` must be positive."""
        if s <= 0:
            raise ValueError("scale factor must be positive")
        return ConvexRegion(self.kind, tuple(p * s for p in self.vertices))

    def bbox(self):
        xs = [p.x for p in self.vertices]
        ys = [p.y for p in self.vertices]
        return Point(min(xs), min(ys)), Point(max(xs), max(ys))


EMPTY_REGION = ConvexRegion(EMPTY, ())


def convex_hull(points):
    """Canonical convex hull (Andrew's monotone chain, collinear points dropped)."""
    pts = sorted(set(points))
    if not pts:
        return EMPTY_REGION
    if len(pts) == 1:
        return ConvexRegion(POINT, (pts[0],))

    def half(seq):
        chain = []
        for p in seq:
            while len(chain) >= 2 and orient(chain[-2], chain[-1], p) <= 0:
                chain.pop()
            chain.append(p)
        return chain

    lower = half(pts)
    upper = half(reversed(pts))
    hull = lower[:-1] + upper[:-1]
    if len(hull) == 2:
        return ConvexRegion(SEGMENT, (hull[0], hull[1]))
    if len(hull) == 1:  # pragma: no cover - distinct points never collapse to one
        return ConvexRegion(POINT, (hull[0],))
    return ConvexRegion(POLYGON, tuple(hull))


canonical = convex_hull


def region_halfplanes(region):
    """Half-planes whose intersection is exactly ``region`` (non-empty)."""
    vs = region.vertices
    if region.kind == POLYGON:
        planes = []
        for i, a in enumerate(vs):
            b = vs[(i + 1) % len(vs)]
            n = Point(b.y - a.y, a.x - b.x)
            planes.append(HalfPlane(n, n.dot(a)))
        return planes
    if region.kind == SEGMENT:
        a, b = vs
        d = b - a
        n = Point(d.y, -d.x)
        return [
            HalfPlane(n, n.dot(a)),
            HalfPlane(-n, -n.dot(a)),
            HalfPlane(d, d.dot(b)),
            HalfPlane(-d, -d.dot(a)),
        ]
    if region.kind == POINT:
        (p,) = vs
        return [
            HalfPlane(Point(ONE, ZERO), p.x),
            HalfPlane(Point(-ONE, ZERO), -p.x),
            HalfPlane(Point(ZERO, ONE), p.y),
            HalfPlane(Point(ZERO, -ONE), -p.y),
        ]
    raise ValueError("the empty region has no half-plane description")


def clip(vertices, plane):
    """Clip a convex vertex cycle (any length) by one half-plane."""
    n = len(vertices)
    if n == 0:
        return []
    vals = [plane.value(p) for p in vertices]
    if all(v <= 0 for v in vals):
        return list(vertices)
    if n == 1:
        return []
    out = []
    for i in range(n):
        p, vp = vertices[i], vals[i]
        j = (i + 1) % n
        q, vq = vertices[j], vals[j]
        if vp <= 0:
            out.append(p)
        if (vp < 0 < vq) or (vq < 0 < vp):
            t = vp / (vp - vq)
            out.append(Point(p.x + t * (q.x - p.x), p.y + t * (q.y - p.y)))
    dedup = []
    for p in out:
        if not dedup or dedup[-1] != p:
            dedup.append(p)
    while len(dedup) > 1 and dedup[0] == dedup[-1]:
        dedup.pop()
    return dedup


def clip_all(vertices, planes):
    vs = list(vertices)
    for plane in planes:
        vs = clip(vs, plane)
        if not vs:
            break
    return vs


def _angle_cmp(u, v):
    hu = u.y > 0 or (u.y == 0 and u.x > 0)
    hv = v.y > 0 or (v.y == 0 and v.x > 0)
    if hu != hv:
        return -1 if hu else 1
    c = u.cross(v)
    return -1 if c > 0 else (1 if c < 0 else 0)


def _distinct_directions(normals):
    ordered = sorted(normals, key=cmp_to_key(_angle_cmp))
    out = []
    for n in ordered:
        if out and _angle_cmp(out[-1], n) == 0:
            continue
        out.append(n)
    return out


def _positively_spanning(dirs):
    if len(dirs) < 3:
        return False
    return all(dirs[i].cross(dirs[(i + 1) % len(dirs)]) > 0 for i in range(len(dirs)))


def _line_meet(h1, h2):
    det = h1.normal.cross(h2.normal)
    if det == 0:
        return None
    x = (h1.offset * h2.normal.y - h2.offset * h1.normal.y) / det
    y = (h1.normal.x * h2.offset - h2.normal.x * h1.offset) / det
    return Point(x, y)


def _small_intersection(planes):
    """Intersection of a few half-planes known to bound a region."""
    pts = []
    for i in range(len(planes)):
        for j in range(i + 1, len(planes)):
            p = _line_meet(planes[i], planes[j])
            if p is not None and all(h.value(p) <= 0 for h in planes):
                pts.append(p)
    return pts


def _spanning_subset(planes, dirs):
    by_dir = {}
    for h in planes:
        g = h.normal
        for d in dirs:
            if _angle_cmp(d, g) == 0:
                by_dir.setdefault(d, h)
                break
    chosen = [0]
    cur = 0
    while cur == 0 or dirs[cur].cross(dirs[0]) <= 0:
        # jump to the farthest direction strictly less than pi ahead
        nxt = cur + 1
        for idx in range(cur + 2, len(dirs)):
            if dirs[cur].cross(dirs[idx]) <= 0:
                break
            nxt = idx
        chosen.append(nxt)
        cur = nxt
    return [by_dir[dirs[i]] for i in chosen]


def halfplane_intersection(planes):
    """Exact intersection of half-planes as a canonical region.

    Raises :class:`UnboundedRegion` when the intersection is non-empty and
    unbounded.
    """
    planes = list(planes)
    if not planes:
        raise InputError("need at least one half-plane")
    for h in planes:
        if h.normal.x == 0 and h.normal.y == 0:
            raise InputError("half-plane normal must be non-zero")
    dirs = _distinct_directions([h.normal for h in planes])
    if _positively_spanning(dirs):
        start = _small_intersection(_spanning_subset(planes, dirs))
        if not start:
            return EMPTY_REGION
        start = list(convex_hull(start).vertices)
        return convex_hull(clip_all(start, planes))
    # Unbounded unless empty: test against a box that must meet any
    # non-empty intersection (it holds every vertex and every line foot).
    cands = [Point(ZERO, ZERO)]
    for h in planes:
        cands.append(h.normal * (h.offset / h.normal.dot(h.normal)))
    for i in range(len(planes)):
        for j in range(i + 1, len(planes)):
            p = _line_meet(planes[i], planes[j])
            if p is not None:
                cands.append(p)
    m = max(max(abs(p.x), abs(p.y)) for p in cands) + 1
    box = [Point(-m, -m), Point(m, -m), Point(m, m), Point(-m, m)]
    if clip_all(box, planes):
        raise UnboundedRegion("half-plane intersection is unbounded")
    return EMPTY_REGION


def intersect_regions(a, b):
    if a.is_empty or b.is_empty:
        return EMPTY_REGION
    if len(b.vertices) > len(a.vertices):
        a, b = b, a
    return convex_hull(clip_all(a.vertices, region_halfplanes(b)))


def intersect_many(regions):
    regions = list(regions)
    if not regions:
        raise InputError("need at least one region")
    if any(r.is_empty for r in regions):
        return EMPTY_REGION
    planes = [h for r in regions[1:] for h in region_halfplanes(r)]
    return convex_hull(clip_all(regions[0].vertices, planes))


def _on_segment(a, b, p):
    if orient(a, b, p) != 0:
        return False
    return min(a.x, b.x) <= p.x <= max(a.x, b.x) and min(a.y, b.y) <= p.y <= max(a.y, b.y)


def contains(region, p, mode=CLOSED):
    vs = region.vertices
    if region.kind == POLYGON:
        n = len(vs)
        if mode == INTERIOR:
            return all(orient(vs[i], vs[(i + 1) % n], p) > 0 for i in range(n))
        return all(orient(vs[i], vs[(i + 1) % n], p) >= 0 for i in range(n))
    if mode == INTERIOR or region.kind == EMPTY:
        return False
    if region.kind == SEGMENT:
        return _on_segment(vs[0], vs[1], p)
    return vs[0] == p


def contains_region(outer, inner):
    """Closed containment, checked on the vertices of ``inner``."""
    return all(contains(outer, v) for v in inner.vertices)


def relint_contains(region, p):
    vs = region.vertices
    if region.kind == POLYGON:
        return contains(region, p, INTERIOR)
    if region.kind == SEGMENT:
        return _on_segment(vs[0], vs[1], p) and p != vs[0] and p != vs[1]
    if region.kind == POINT:
        return vs[0] == p
    return False


def on_boundary(region, p):
    if region.kind == POLYGON:
        return contains(region, p) and not contains(region, p, INTERIOR)
    return contains(region, p)


def edges(region):
    vs = region.vertices
    if region.kind == POLYGON:
        return [(vs[i], vs[(i + 1) % len(vs)]) for i in range(len(vs))]
    if region.kind == SEGMENT:
        return [(vs[0], vs[1])]
    return []


def segment_intersection(p1, p2, q1, q2):
    """Intersection of closed segments as ``None`` or an endpoint pair."""
    if max(p1.x, p2.x) < min(q1.x, q2.x) or max(q1.x, q2.x) < min(p1.x, p2.x):
        return None
    if max(p1.y, p2.y) < min(q1.y, q2.y) or max(q1.y, q2.y) < min(p1.y, p2.y):
        return None
    d1 = p2 - p1
    d2 = q2 - q1
    w = q1 - p1
    denom = d1.cross(d2)
    if denom != 0:
        t = w.cross(d2) / denom
        u = w.cross(d1) / denom
        if 0 <= t <= 1 and 0 <= u <= 1:
            hit = p1 + d1 * t
            return hit, hit
        return None
    if w.cross(d1) != 0:
        return None
    ll = d1.dot(d1)
    if ll == 0:
        return (p1, p1) if _on_segment(q1, q2, p1) else None
    t0 = w.dot(d1) / ll
    t1 = (q2 - p1).dot(d1) / ll
    lo = max(ZERO, min(t0, t1))
    hi = min(ONE, max(t0, t1))
    if lo > hi:
        return None
    return p1 + d1 * lo, p1 + d1 * hi


def boundary_components(a, b):
    """Connected components of ``bd(a) & bd(b)`` for two polygons.

    Each component is reported as a pair of its lexicographically extreme
    points (equal for a point component).
    """
    pieces = []
    for p1, p2 in edges(a):
        for q1, q2 in edges(b):
            hit = segment_intersection(p1, p2, q1, q2)
            if hit is not None:
                pieces.append(hit)
    parent = list(range(len(pieces)))

    def find(i):
        while parent[i] != i:
            parent[i] = parent[parent[i]]
            i = parent[i]
        return i

    for i in range(len(pieces)):
        for j in range(i + 1, len(pieces)):
            if find(i) != find(j) and segment_intersection(*pieces[i], *pieces[j]) is not None:
                parent[find(i)] = find(j)
    groups = {}
    for i, piece in enumerate(pieces):
        groups.setdefault(find(i), []).extend(piece)
    comps = [(min(pts), max(pts)) for pts in groups.values()]
    return sorted(comps)
