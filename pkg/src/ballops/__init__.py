"""Exact ball intersections, ball hulls and Chebyshev sets in normed planes
whose unit ball is a centrally symmetric polygon."""

from .arcs import Arc, WalkResult, arc_hull, minimal_arcs, pivot_walk
from .centers import (
    CriticalReport,
    base_system,
    ch_singleton_centrable,
    critical_set,
    degree_two_center,
    inner_illuminating,
    is_global,
    verify_base_illuminates,
)
from .completion import CompletionResult, complete_greedy, complete_in_ball, is_complete, sample_completions
from .errors import BallOpsError, InputError, InvariantBreach, PreconditionError
from .kernel import (
    ConvexRegion,
    HalfPlane,
    Point,
    boundary_components,
    contains,
    convex_hull,
    halfplane_intersection,
    intersect_regions,
    point,
    relint_contains,
)
from .lp import LinearProgram, chebyshev_radius, gauge_hausdorff, solve_lp
from .norm import Ball, NormedPlane, ball, gauge, is_extreme_point_of_ball, sphere_path, validate_plane
from .operators import BallOpResult, PointSet, ball_hull, ball_intersection, chebyshev_set, diameter, is_centrable
from .oracle import Grid, grid_for, oracle_member_bh, oracle_member_bi, oracle_minimax
from .scalar import Q, as_scalar

import types as _types

__all__ = [n for n, v in list(globals().items())
           if not n.startswith("_") and not isinstance(v, _types.ModuleType)]
