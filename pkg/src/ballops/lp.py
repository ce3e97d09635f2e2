"""Exact randomized-incremental LP (Seidel) in at most four variables.

Used for the Chebyshev radius (minimax location) and for gauge distances
from a point to a convex region.
"""

import math
import random
from dataclasses import dataclass, field

from .errors import EmptyInput, Infeasible, InvariantBreach, Unbounded
from .kernel import POINT, Point, contains, edges, region_halfplanes
from .norm import gauge
from .scalar import ONE, ZERO, as_scalar

MAX_DIM = 4


@dataclass
class LinearProgram:
    """Minimize ``objective . z`` subject to ``a . z <= rhs`` for each constraint.

    ``bounds`` optionally gives ``(lo, hi)`` per variable; they are treated
    as part of the problem.  Without bounds an internal box large enough to
    hold every vertex is used and unboundedness is detected separately.
    """

    objective: tuple
    constraints: list = field(default_factory=list)
    bounds: list = None

    def __post_init__(self):
        self.objective = tuple(as_scalar(c) for c in self.objective)
        d = len(self.objective)
        if not 1 <= d <= MAX_DIM:
            raise ValueError(f"dimension {d} outside 1..{MAX_DIM}")
        cons = []
        for a, b in self.constraints:
            a = tuple(as_scalar(x) for x in a)
            if len(a) != d:
                raise ValueError("constraint dimension mismatch")
            cons.append((a, as_scalar(b)))
        self.constraints = cons
        if self.bounds is not None:
            self.bounds = [(as_scalar(lo), as_scalar(hi)) for lo, hi in self.bounds]

    @property
    def dimension(self):
        return len(self.objective)


def _dot(a, z):
    return sum(x * y for x, y in zip(a, z))


def _seidel(cons, c, lo, hi, rng):
    d = len(c)
    if d == 1:
        low, high = lo[0], hi[0]
        for (a0,), b in cons:
            if a0 > 0:
                high = min(high, b / a0)
            elif a0 < 0:
                low = max(low, b / a0)
            elif b < 0:
                return None
        if low > high:
            return None
        return [low if c[0] >= 0 else high]

    cons = list(cons)
    rng.shuffle(cons)
    z = [lo[i] if c[i] >= 0 else hi[i] for i in range(d)]
    for i, (a, b) in enumerate(cons):
        if _dot(a, z) <= b:
            continue
        k = max(range(d), key=lambda j: abs(a[j]))
        ak = a[k]
        if ak == 0:
            return None  # 0 <= b fails
        rest = [j for j in range(d) if j != k]
        ratio = [a[j] / ak for j in rest]
        shift = b / ak
        sub = []
        unit_hi = tuple(ONE if j == k else ZERO for j in range(d))
        unit_lo = tuple(-ONE if j == k else ZERO for j in range(d))
        previous = cons[:i] + [(unit_hi, hi[k]), (unit_lo, -lo[k])]
        for a2, b2 in previous:
            f = a2[k]
            if f == 0:
                sub.append(([a2[j] for j in rest], b2))
            else:
                sub.append(([a2[j] - f * r for j, r in zip(rest, ratio)], b2 - f * shift))
        c_sub = [c[j] - c[k] * r for j, r in zip(rest, ratio)]
        res = _seidel(sub, c_sub, [lo[j] for j in rest], [hi[j] for j in rest], rng)
        if res is None:
            return None
        zk = shift - sum(r * v for r, v in zip(ratio, res))
        z = [None] * d
        z[k] = zk
        for j, v in zip(rest, res):
            z[j] = v
    return z


def _int_scale(values):
    den = 1
    for v in values:
        den = den * v.denominator // math.gcd(den, v.denominator)
    return [abs(v.numerator * (den // v.denominator)) for v in values]


def _vertex_bound(lp):
    biggest = 1
    for a, b in lp.constraints:
        biggest = max([biggest] + _int_scale(list(a) + [b]))
    biggest = max([biggest] + _int_scale(list(lp.objective)))
    d = lp.dimension
    return as_scalar((d * biggest) ** d + 1)


def solve_lp(lp, seed=0):
    """Exact optimum ``(value, witness)`` of ``lp``; deterministic per seed."""
    d = lp.dimension
    rng = random.Random(seed)
    if lp.bounds is not None:
        lo = [b[0] for b in lp.bounds]
        hi = [b[1] for b in lp.bounds]
        z = _seidel(lp.constraints, list(lp.objective), lo, hi, rng)
        if z is None:
            raise Infeasible("linear program is infeasible")
        return _dot(lp.objective, z), tuple(z)
    m = _vertex_bound(lp)
    z = _seidel(lp.constraints, list(lp.objective), [-m] * d, [m] * d, rng)
    if z is None:
        raise Infeasible("linear program is infeasible")
    if any(abs(v) == m for v in z):
        homog = [(a, ZERO) for a, _ in lp.constraints]
        r = _seidel(homog, list(lp.objective), [-ONE] * d, [ONE] * d, rng)
        if _dot(lp.objective, r) < 0:
            raise Unbounded("linear program is unbounded")
    return _dot(lp.objective, z), tuple(z)


def _points(K):
    return list(getattr(K, "points", K))


def chebyshev_radius(plane, K, seed=0):
    """Exact Chebyshev radius of ``K`` and one Chebyshev center."""
    pts = _points(K)
    if not pts:
        raise EmptyInput("point set is empty")
    if len(set(pts)) == 1:
        return ZERO, pts[0]
    p0 = pts[0]
    lam0 = max(gauge(plane, p - p0) for p in pts)
    ext = max(max(abs(v.x), abs(v.y)) for v in plane.unit_ball.vertices)
    xs = [p.x for p in pts]
    ys = [p.y for p in pts]
    pad = lam0 * ext
    bounds = [(min(xs) - pad, max(xs) + pad), (min(ys) - pad, max(ys) + pad), (ZERO, lam0)]
    # a.(p - z) <= lam for every point p  <=>  -a.z - lam <= -max_p a.p
    cons = []
    for h in plane.facets:
        a = h.normal
        top = max(a.dot(p) for p in pts)
        cons.append(((-a.x, -a.y, -ONE), -top))
    value, z = solve_lp(LinearProgram((ZERO, ZERO, ONE), cons, bounds), seed=seed)
    center = Point(z[0], z[1])
    if max(gauge(plane, p - center) for p in pts) != value:
        raise InvariantBreach("Chebyshev witness does not attain the LP value")
    return value, center


def region_distance(plane, v, region):
    """Gauge distance ``min_{z in region} gauge(z - v)``, exactly.

    ``z -> gauge(z - v)`` is linear on each cone spanned by two adjacent
    unit-ball vertices around ``v``, so on the boundary of a region its
    minimum sits at a region vertex or where an edge crosses one of the rays
    ``v + t u`` through a unit-ball vertex ``u``.
    """
    if region.is_empty:
        raise EmptyInput("distance to the empty region")
    if contains(region, v):
        return ZERO
    cands = list(region.vertices)
    for a, b in edges(region):
        e = b - a
        for u in plane.unit_ball.vertices:
            den = e.cross(u)
            if den == 0:
                continue
            w = v - a
            s = w.cross(u) / den
            t = w.cross(e) / den
            if 0 <= s <= 1 and t >= 0:
                cands.append(a + e * s)
    return min(gauge(plane, z - v) for z in cands)


def region_distance_lp(plane, v, region, seed=0):
    """Same as :func:`region_distance`, solved as a three-variable LP."""
    if region.is_empty:
        raise EmptyInput("distance to the empty region")
    if contains(region, v):
        return ZERO
    if region.kind == POINT:
        return gauge(plane, region.vertices[0] - v)
    w0 = region.vertices[0]
    lo, hi = region.bbox()
    bounds = [(lo.x, hi.x), (lo.y, hi.y), (ZERO, gauge(plane, w0 - v))]
    cons = [((h.normal.x, h.normal.y, ZERO), h.offset) for h in region_halfplanes(region)]
    for h in plane.facets:
        a = h.normal
        cons.append(((a.x, a.y, -ONE), a.dot(v)))
    value, _ = solve_lp(LinearProgram((ZERO, ZERO, ONE), cons, bounds), seed=seed)
    return value


def gauge_hausdorff(plane, a, b):
    """Hausdorff distance between two non-empty convex regions under the gauge."""
    if a.is_empty or b.is_empty:
        raise EmptyInput("Hausdorff distance needs non-empty regions")
    worst = ZERO
    for src, dst in ((a, b), (b, a)):
        for v in src.vertices:
            worst = max(worst, region_distance(plane, v, dst))
    return worst
