"""Brute-force oracles used to cross-check the exact operators.

Grid evaluations stay exact: on a lattice ``x0 + h (u, v)`` every quantity
``max_j (c_j - a_j . x)`` becomes an integer affine function of ``(u, v)`` after
clearing denominators, so numpy integer arrays (or object arrays when the
integers get large) give exact values.
"""

import math
from dataclasses import dataclass

import numpy as np

from .kernel import HalfPlane, Point, halfplane_intersection
from .lp import LinearProgram, solve_lp
from .norm import gauge
from .operators import diameter, intersection_halfplanes
from .scalar import Q, ZERO, as_scalar

_INT64_SAFE = 2 ** 60


@dataclass(frozen=True)
class Grid:
    lo: Point
    hi: Point
    h: object

    @property
    def shape(self):
        nx = int((self.hi.x - self.lo.x) / self.h) + 1
        ny = int((self.hi.y - self.lo.y) / self.h) + 1
        return nx, ny

    def point(self, i, j):
        return Point(self.lo.x + self.h * i, self.lo.y + self.h * j)


def grid_for(K, n=64):
    """Lattice of step ``diam/n`` over the bounding box of K grown by 2 diam."""
    d, _ = diameter(K)
    if d == 0:
        p = K.points[0]
        return Grid(p, p, Q(1))
    xs = [p.x for p in K.points]
    ys = [p.y for p in K.points]
    h = d / n
    lo = Point(min(xs) - 2 * d, min(ys) - 2 * d)
    span_x = math.ceil((max(xs) - min(xs) + 4 * d) / h)
    span_y = math.ceil((max(ys) - min(ys) + 4 * d) / h)
    return Grid(lo, Point(lo.x + h * span_x, lo.y + h * span_y), h)


def lipschitz_bound(plane, grid):
    """Gauge distance from any point of the box to the nearest lattice point."""
    half = grid.h / 2
    return half * max(gauge(plane, Point(Q(1), Q(1))), gauge(plane, Point(Q(1), Q(-1))))


def _lcm_den(values):
    den = 1
    for v in values:
        v = Q(v)
        den = den * v.denominator // math.gcd(den, v.denominator)
    return den


def _affine_max(grid, rows):
    """Exact ``max_j (c_j - h (ax_j u + ay_j v))`` times a common integer scale.

    ``rows`` holds ``(c_j, ax_j, ay_j)`` with ``c_j`` already relative to the
    lattice origin.  Returns the integer array and the scale.
    """
    h = grid.h
    flat = [c for c, _, _ in rows] + [h * ax for _, ax, _ in rows] + [h * ay for _, _, ay in rows]
    L = _lcm_den(flat)
    C = [int(Q(c) * L) for c, _, _ in rows]
    A = [int(Q(h * ax) * L) for _, ax, _ in rows]
    B = [int(Q(h * ay) * L) for _, _, ay in rows]
    nx, ny = grid.shape
    big = max([abs(v) for v in C + A + B] + [1]) * (nx + ny + 1)
    dtype = np.int64 if big < _INT64_SAFE else object
    u = np.arange(nx, dtype=dtype)[:, None]
    v = np.arange(ny, dtype=dtype)[None, :]
    out = None
    for c, a, b in zip(C, A, B):
        val = c - a * u - b * v
        out = val if out is None else np.maximum(out, val)
    return out, L


def _at_most(vals, limit):
    """Exact ``vals <= limit`` for an integer array and a rational limit."""
    limit = Q(limit)
    num, den = int(limit.numerator), int(limit.denominator)
    return np.asarray(vals * den <= num, dtype=bool)


def _far_field(plane, pts, grid):
    """Scaled ``max_p gauge(p - x)`` over the lattice."""
    x0 = grid.lo
    rows = []
    for f in plane.facets:
        a = f.normal
        top = max(a.dot(p) for p in pts)
        rows.append((top - a.dot(x0), a.x, a.y))
    return _affine_max(grid, rows)


def oracle_minimax(plane, K, grid):
    """Grid minimum of the farthest-point distance; exact at each lattice point."""
    pts = list(getattr(K, "points", K))
    if len(set(pts)) == 1 and grid.lo == grid.hi:
        return ZERO
    vals, L = _far_field(plane, pts, grid)
    return Q(int(vals.min())) / L


def oracle_member_bi(plane, K, lam, g):
    lam = as_scalar(lam)
    return max(gauge(plane, g - p) for p in getattr(K, "points", K)) <= lam


def feasible_centers(plane, K, lam, grid):
    """Boolean mask of lattice centers whose radius-``lam`` ball holds K."""
    vals, L = _far_field(plane, list(K.points), grid)
    return _at_most(vals, as_scalar(lam) * L)


def oracle_member_bh(plane, K, lam, g, grid, mask=None):
    """False only if some lattice ball holding K misses ``g``."""
    lam = as_scalar(lam)
    if mask is None:
        mask = feasible_centers(plane, K, lam, grid)
    x0 = grid.lo
    rows = [(f.normal.dot(g) - f.normal.dot(x0), f.normal.x, f.normal.y) for f in plane.facets]
    # gauge(g - x) = max_j a_j.(g - x), the same affine form with g in place of K
    vals, L = _affine_max(grid, rows)
    bad = ~_at_most(vals, lam * L)
    return not bool(np.any(bad & mask))


def oracle_bh_region(plane, K, lam, seed=0):
    """``bh(K, lam)`` from its support description.

    Every radius-``lam`` ball holding K is centred in ``C = bi(K, lam)``, so
    ``bh = meet_j {a_j . z <= lam + min_{x in C} a_j . x}``; each minimum is an
    LP over the half-plane description of ``C``.
    """
    lam = as_scalar(lam)
    cons = [((h.normal.x, h.normal.y), h.offset) for h in intersection_halfplanes(plane, K.points, lam)]
    ext = max(max(abs(v.x), abs(v.y)) for v in plane.unit_ball.vertices) * lam
    xs = [p.x for p in K.points]
    ys = [p.y for p in K.points]
    bounds = [(min(xs) - ext, max(xs) + ext), (min(ys) - ext, max(ys) + ext)]
    planes = []
    for f in plane.facets:
        a = f.normal
        low, _ = solve_lp(LinearProgram((a.x, a.y), cons, bounds), seed=seed)
        planes.append(HalfPlane(a, lam + low))
    return halfplane_intersection(planes)
