"""Property suites shared by ``ballops verify`` and the acceptance tests.

Each suite takes a point set (plus a seed where sampling is involved) and
returns a list of :class:`Verdict`.  A skipped verdict records a best-effort
procedure that gave up; it is logged, not counted as a failure.
"""

import random
from dataclasses import dataclass

from .arcs import arc_hull, pivot_walk
from .centers import (
    base_system,
    ch_singleton_centrable,
    degree_two_center,
    illumination_gap,
    is_global,
)
from .completion import complete_greedy, complete_in_ball, is_complete
from .kernel import POINT, contains, contains_region, convex_hull, intersect_many, relint_contains
from .lp import chebyshev_radius
from .norm import ball, gauge, is_extreme_point_of_ball
from .operators import (
    PointSet,
    _ball_intersection_region,
    ball_hull,
    ball_intersection,
    chebyshev_set,
    diameter,
    is_centrable,
)
from .oracle import (
    feasible_centers,
    grid_for,
    lipschitz_bound,
    oracle_bh_region,
    oracle_member_bh,
    oracle_member_bi,
    oracle_minimax,
)
from .report import jsonable
from .scalar import Q

COMPLETION_SAMPLES = 5


@dataclass(frozen=True)
class Verdict:
    property: str
    passed: bool
    witness: object = None
    skipped: bool = False

    def as_json(self):
        out = {"property": self.property, "pass": self.passed, "witness": jsonable(self.witness)}
        if self.skipped:
            out["skipped"] = True
        return out


class _Log(list):
    def check(self, name, ok, witness=None):
        self.append(Verdict(name, bool(ok), None if ok else witness))

    def skip(self, name, witness=None):
        self.append(Verdict(name, True, witness, skipped=True))


def _bi(K, lam):
    return ball_intersection(K, lam).region


def _fraction(rng):
    return Q(rng.randint(1, 15), 16)


# 1 -------------------------------------------------------------------------

def identity_suite(K, seed=0, grid_n=32):
    log = _Log()
    d, _ = diameter(K)
    bh = ball_hull(K, d).region
    log.check("identity.bh_equals_bi_bi", oracle_bh_region(K.plane, K, d) == bh, bh)
    log.check("identity.bi_equals_bi_bh", _ball_intersection_region(K.plane, bh.vertices, d) == _bi(K, d), bh)
    grid = grid_for(K, grid_n)
    mask = feasible_centers(K.plane, K, d, grid)
    bad = [v for v in bh.vertices if not oracle_member_bh(K.plane, K, d, v, grid, mask)]
    log.check("bh.grid_falsifier", not bad, bad)
    rng = random.Random(seed)
    bi = _bi(K, d)
    nx, ny = grid.shape
    probes = [grid.point(rng.randrange(nx), rng.randrange(ny)) for _ in range(24)]
    probes += list(bi.vertices)
    wrong = [g for g in probes if oracle_member_bi(K.plane, K, d, g) != contains(bi, g)]
    log.check("bi.membership_oracle", not wrong, wrong)
    return log


# 2 -------------------------------------------------------------------------

def three_way_suite(K, seed=0):
    log = _Log()
    d, _ = diameter(K)
    bh = ball_hull(K, d).region
    ah, _ = arc_hull(K)
    walk = pivot_walk(K)
    log.check("arcs.arc_hull_equals_bh", ah == bh, {"arc_hull": ah, "bh": bh})
    log.check("walk.equals_bh", walk.region == bh, {"walk": walk.region, "bh": bh})
    if walk.balls:
        kept = _ball_intersection_region(K.plane, [b.center for b in walk.balls], d)
        log.check("walk.kept_balls_meet_to_bh", kept == bh, kept)
    return log


# 3 -------------------------------------------------------------------------

def inclusion_suite(K, seed=0, samples=COMPLETION_SAMPLES):
    log = _Log()
    rng = random.Random(seed)
    d, _ = diameter(K)
    lam_k, _ = chebyshev_radius(K.plane, K)
    hull_k = convex_hull(K.points)
    for lam in sorted({d, d + d * _fraction(rng), 2 * d}):
        bh = ball_hull(K, lam, radius=lam_k).region
        bi = _bi(K, lam)
        log.check("chain.K_in_bh", contains_region(bh, hull_k), {"lambda": lam})
        log.check("chain.bh_in_bi", contains_region(bi, bh), {"lambda": lam})
    if lam_k < d:
        lam = lam_k + (d - lam_k) * _fraction(rng)
        log.check("chain.K_in_bh_small_radius", contains_region(ball_hull(K, lam, radius=lam_k).region, hull_k),
                  {"lambda": lam})
    bh = ball_hull(K, d, radius=lam_k).region
    bi = _bi(K, d)
    for i in range(samples):
        res = complete_greedy(K, seed=seed * 1000 + i)
        log.check("completion.exact", res.exact, res)
        if not res.exact:
            continue
        c = res.region
        log.check("completion.diameter", diameter(K.with_points(c.vertices))[0] == d, c)
        log.check("chain.bh_in_completion", contains_region(c, bh), c)
        log.check("chain.completion_in_bi", contains_region(bi, c), c)
    return log


# 4 -------------------------------------------------------------------------

def monotone_suite(K, seed=0):
    log = _Log()
    rng = random.Random(seed)
    d, _ = diameter(K)
    lam_k, _ = chebyshev_radius(K.plane, K)
    lam1 = lam_k + (2 * d - lam_k) * _fraction(rng)
    lam2 = lam1 + (2 * d - lam1) * _fraction(rng)
    log.check("monotone.bi_in_radius", contains_region(_bi(K, lam2), _bi(K, lam1)), [lam1, lam2])
    bh1 = ball_hull(K, lam1, radius=lam_k).region
    bh2 = ball_hull(K, lam2, radius=lam_k).region
    log.check("monotone.bh_in_radius", contains_region(bh1, bh2), [lam1, lam2])
    pts = list(K.points)
    if len(pts) >= 2:
        k = rng.randint(1, len(pts) - 1)
        sub = K.with_points(rng.sample(pts, k))
        lam_sub, _ = chebyshev_radius(K.plane, sub)
        log.check("radius.monotone_in_sets", lam_sub <= lam_k, sub)
        log.check("monotone.bi_in_sets", contains_region(_bi(sub, lam1), _bi(K, lam1)), sub)
        log.check("monotone.bh_in_sets",
                  contains_region(bh1, ball_hull(sub, lam1, radius=lam_sub).region), sub)
        parts = [[] for _ in range(rng.randint(2, min(3, len(pts))))]
        order = pts[:]
        rng.shuffle(order)
        for i, p in enumerate(order):
            parts[i % len(parts)].append(p)
        for lam in (lam_k / 2, lam1):
            whole = _bi(K, lam)
            pieces = intersect_many([_bi(K.with_points(part), lam) for part in parts])
            log.check("bi.union_rule", whole == pieces, {"lambda": lam, "parts": parts})
    return log


# 5 -------------------------------------------------------------------------

def chebyshev_suite(K, seed=0, grid_n=64):
    log = _Log()
    d, _ = diameter(K)
    lam, c = chebyshev_radius(K.plane, K, seed)
    log.check("lp.witness_feasible", max(gauge(K.plane, p - c) for p in K.points) == lam, c)
    log.check("radius.at_most_diameter", lam <= d, [lam, d])
    log.check("radius.diameter_at_most_twice", d <= 2 * lam, [lam, d])
    _, ch = chebyshev_set(K)
    log.check("ch.certificate_nonempty", not ch.is_empty, ch)
    if lam > 0:
        squeezed = _bi(K, lam - lam / 2 ** 20)
        log.check("ch.certificate_tight", squeezed.is_empty, squeezed)
    log.check("ch.vertices_are_centers",
              all(max(gauge(K.plane, p - x) for p in K.points) == lam for x in ch.vertices), ch)
    log.check("ch.in_bi", contains_region(_bi(K, d), ch), ch)
    bh = ball_hull(K, d, radius=lam).region
    for x in ch.vertices:
        log.check("ch.min_ball_holds_bh", contains_region(ball(K.plane, x, lam).region, bh), x)
    grid = grid_for(K, grid_n)
    approx = oracle_minimax(K.plane, K, grid)
    bound = lipschitz_bound(K.plane, grid)
    log.check("grid.minimax_within_bound", lam <= approx <= lam + bound,
              {"exact": lam, "grid": approx, "bound": bound})
    return log


# 6 -------------------------------------------------------------------------

def _illumination_checks(log, base_points, x, lam, K, crit, degree):
    b = ball(K.plane, x, lam)
    gap = illumination_gap(base_points, b.region)
    log.check("base.illuminates", gap is None,
              {"center": x, "base": base_points, "unlit": gap})
    if degree == 3:
        log.check("base.critical_set_global", is_global(crit, b), {"center": x, "critical": crit})


def two_point_check(plane, p, q):
    """Whether Ch({p, q}) is a point agrees with p being a ball vertex."""
    pair = PointSet(plane, (p, q))
    _, ch = chebyshev_set(pair)
    lam = gauge(plane, p - q) / 2
    extreme = is_extreme_point_of_ball(ball(plane, (p + q) / 2, lam), p)
    return (ch.kind == POINT) == extreme, ch, extreme


def centers_suite(K, seed=0):
    log = _Log()
    lam, ch = chebyshev_set(K)
    centrable = is_centrable(K, lam)
    found = degree_two_center(K, seed)
    log.check("centrable.iff_degree_two", centrable == (found is not None),
              {"centrable": centrable, "degree_two": found})
    hull_k = convex_hull(K.points)
    for x in ch.vertices:
        rep = base_system(K, x, lam)
        if rep.diagnostic and not centrable:
            log.skip("noncentrable.hull_only_base", {"center": x, "base": rep.base_system})
        if not centrable:
            log.check("noncentrable.base_exists", rep.degree in (2, 3), {"center": x})
            log.check("noncentrable.no_pair_base", rep.degree != 2, rep)
            log.check("noncentrable.center_in_relint_hull", relint_contains(hull_k, x), x)
        if rep.degree is not None:
            _illumination_checks(log, rep.base_system, x, lam, K, rep.critical_points, rep.degree)
    if found is not None:
        x, pair = found
        _illumination_checks(log, pair, x, lam, K, (), 2)
    if centrable:
        d = 2 * lam
        pts = K.points
        for i, p in enumerate(pts):
            for q in pts[i + 1:]:
                if gauge(K.plane, p - q) != d:
                    continue
                m = (p + q) / 2
                ok = contains(ch, m) and base_system(K, m, lam).degree == 2
                log.check("centrable.diametral_midpoint_is_center", ok, {"chord": [p, q], "midpoint": m})
        ok, _ = ch_singleton_centrable(K, lam)
        log.check("singleton.extreme_chord", ok == (ch.kind == POINT),
                  {"criterion": ok, "ch": ch})
    _, (p, q) = diameter(K)
    if p != q:
        ok, pch, extreme = two_point_check(K.plane, p, q)
        log.check("singleton.two_point", ok, {"pair": [p, q], "ch": pch, "extreme": extreme})
    return log


# 7 -------------------------------------------------------------------------

def completion_suite(K, seed=0, samples=COMPLETION_SAMPLES):
    log = _Log()
    plane = K.plane
    d, _ = diameter(K)
    lam, ch = chebyshev_set(K)
    bh = ball_hull(K, d, radius=lam).region
    bi = _bi(K, d)
    comps = [complete_greedy(K, seed=seed * 1000 + i) for i in range(samples)]
    exact = [c.region for c in comps if c.exact]
    log.check("completion.exact", len(exact) == len(comps), [c for c in comps if not c.exact])
    if exact:
        log.check("completion.bh_in_meet", contains_region(intersect_many(exact), bh), exact)
    for y in bi.vertices:
        if contains(convex_hull(K.points), y):
            continue
        res = complete_greedy(K.with_points(list(K.points) + [y]), seed=seed)
        ok = res.exact and contains(res.region, y) and contains_region(bi, res.region)
        ok = ok and diameter(K.with_points(res.region.vertices))[0] == d
        log.check("completion.bi_vertex_covered", ok, {"vertex": y, "completion": res})
    for p in K.points:
        cover = ball(plane, p, d).region
        log.check("completion.inside_ball_at_K", all(contains_region(cover, c) for c in exact), p)
    for c in exact:
        lam_c, _ = chebyshev_radius(plane, c.vertices)
        log.check("completion.radius_not_smaller", lam_c >= lam, c)
    inside = []
    for x in ch.vertices:
        res = complete_in_ball(K, x, lam, seed=seed)
        if res is None or not res.exact:
            log.skip("sandwich.constructive", {"center": x})
            continue
        c_pts = K.with_points(res.region.vertices)
        lam_c, ch_c = chebyshev_set(c_pts)
        inside.append(ch_c)
        log.check("ball_completion.same_radius", lam_c == lam, res)
        log.check("ball_completion.ch_inside_ch", contains_region(ch, ch_c), ch_c)
        log.check("sandwich.center_kept", contains(ch_c, x), {"center": x, "ch_c": ch_c})
    if inside:
        log.check("sandwich.meet_in_ch", contains_region(ch, intersect_many(inside)), inside)
    if is_complete(bh, plane):
        b_pts = K.with_points(bh.vertices)
        lam_b, ch_b = chebyshev_set(b_pts)
        log.check("unique.same_radius", lam_b == lam, [lam, lam_b])
        log.check("unique.same_ch", ch_b == ch, [ch, ch_b])
        log.check("unique.samples_equal_bh", all(c == bh for c in exact), exact)
    return log


SUITES = {
    "identity": identity_suite,
    "three_way": three_way_suite,
    "inclusion": inclusion_suite,
    "monotone": monotone_suite,
    "chebyshev": chebyshev_suite,
    "centers": centers_suite,
    "completion": completion_suite,
}


def run_all(K, seed=0, grid_n=64):
    out = []
    for name, suite in SUITES.items():
        if name == "chebyshev":
            out.extend(suite(K, seed, grid_n=grid_n))
        elif name == "identity":
            out.extend(suite(K, seed, grid_n=max(4, grid_n // 2)))
        else:
            out.extend(suite(K, seed))
    return out


def summarize(verdicts):
    failed = [v for v in verdicts if not v.passed]
    skipped = [v for v in verdicts if v.skipped]
    return {"checked": len(verdicts), "failed": len(failed), "skipped": len(skipped)}
