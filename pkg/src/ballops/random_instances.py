"""Seeded random norms and point sets for property tests and ``verify``."""

import math
import random

from .kernel import POLYGON, convex_hull, point
from .norm import validate_plane
from .operators import PointSet, is_centrable

HEXAGON = [(1, 0), (1, 1), (0, 1), (-1, 0), (-1, -1), (0, -1)]
OCTAGON = [(2, 1), (1, 2), (-1, 2), (-2, 1), (-2, -1), (-1, -2), (1, -2), (2, -1)]
SQUARE = [(1, 1), (-1, 1), (-1, -1), (1, -1)]
DIAMOND = [(1, 0), (0, 1), (-1, 0), (0, -1)]


def named_plane(coords):
    return validate_plane([point(x, y) for x, y in coords])


def random_plane(rng, min_vertices=4, max_vertices=12, scale=10):
    """Symmetric polygon with integer vertices and a vertex count in range."""
    while True:
        target = rng.randrange(min_vertices, max_vertices + 1, 2)
        angles = sorted(rng.uniform(0, math.pi) for _ in range(target // 2))
        half = []
        for t in angles:
            r = rng.uniform(0.6, 1.0) * scale
            half.append((round(r * math.cos(t)), round(r * math.sin(t))))
        pts = [point(x, y) for x, y in half] + [point(-x, -y) for x, y in half]
        hull = convex_hull(pts)
        if hull.kind == POLYGON and min_vertices <= len(hull.vertices) <= max_vertices:
            return validate_plane(hull)


def random_points(rng, plane, min_size=2, max_size=12, spread=6):
    while True:
        n = rng.randint(min_size, max_size)
        pts = [point(rng.randint(-spread, spread), rng.randint(-spread, spread)) for _ in range(n)]
        if len(set(pts)) >= min_size:
            return PointSet(plane, pts)


def random_instance(seed, min_size=2, max_size=12):
    rng = random.Random(seed)
    plane = random_plane(rng)
    return random_points(rng, plane, min_size, max_size)


def instances(count, seed=0, min_size=2, max_size=12):
    return [random_instance(seed * 100003 + i, min_size, max_size) for i in range(count)]


def non_centrable_instances(count, seed=0, norms=(HEXAGON, OCTAGON), max_size=6):
    """Random sets with ``2 lambda_K > diam K`` under the given norms."""
    planes = [named_plane(n) for n in norms]
    found = []
    i = 0
    while len(found) < count:
        rng = random.Random(seed * 100003 + i)
        K = random_points(rng, planes[i % len(planes)], 3, max_size)
        if not is_centrable(K):
            found.append(K)
        i += 1
    return found
