"""``ballops`` command line interface.

Exit codes: 0 success, 1 bad input, 2 violated precondition, 3 broken
invariant (including a failed ``verify``).
"""

import argparse
import os
import sys
import time
from importlib import resources

from . import verify as verify_mod
from .arcs import arc_hull, pivot_walk
from .centers import (
    base_system,
    ch_singleton_centrable,
    critical_set,
    degree_two_center,
    illumination_gap,
    is_global,
)
from .completion import complete_greedy, sample_completions
from .errors import InputError, InvariantBreach, PreconditionError
from .kernel import ConvexRegion, convex_hull
from .lp import chebyshev_radius
from .norm import ball, gauge
from .operators import ball_hull, ball_intersection, chebyshev_set, diameter, is_centrable
from .random_instances import instances
from .report import dumps, jsonable, load_scenario, scenario_echo
from .scalar import as_scalar
from .svg import build_scene, emit_svg, parse_layers

COMMANDS = (
    "gauge", "diam", "radius", "chebyshev", "bi", "bh", "arcs", "walk",
    "complete", "critical", "analyze", "illuminate", "verify", "plot",
)


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        raise InputError(message)


def build_parser():
    p = _Parser(prog="ballops", description="Exact ball operators in polygonal normed planes.")
    p.add_argument("command", choices=COMMANDS)
    p.add_argument("--scenario", required=True, help="scenario JSON file or a bundled scenario name")
    p.add_argument("--lambda", dest="lam", help="radius, as 'p/q' or a decimal")
    p.add_argument("--seed", type=int, help="random seed (falls back to $BALLOPS_SEED, then 0)")
    p.add_argument("--samples", type=int, default=5, help="completion or verification samples")
    p.add_argument("--grid", type=int, default=64, help="oracle lattice steps per diameter")
    p.add_argument("--epsilon", help="completion stopping gap")
    p.add_argument("--svg", help="write a figure to this path")
    p.add_argument("--show", default="", help="figure layers: bi,bh,ch,arcs,ball,completions")
    p.add_argument("--json", action="store_true", help="print the full JSON report")
    return p


def bundled_scenarios():
    root = resources.files("ballops") / "scenarios"
    return sorted(p.name[:-5] for p in root.iterdir() if p.name.endswith(".json"))


def resolve_scenario(name):
    if os.path.exists(name):
        return name
    stem = name[:-5] if name.endswith(".json") else name
    path = resources.files("ballops") / "scenarios" / f"{stem}.json"
    if path.is_file():
        return str(path)
    raise InputError(f"no scenario file {name!r} (bundled: {', '.join(bundled_scenarios())})")


def _seed(args):
    if args.seed is not None:
        return args.seed
    env = os.environ.get("BALLOPS_SEED")
    if env is None:
        return 0
    try:
        return int(env)
    except ValueError as exc:
        raise InputError(f"BALLOPS_SEED must be an integer, got {env!r}") from exc


def _scalar_arg(text, what):
    try:
        return as_scalar(text)
    except (ValueError, ZeroDivisionError) as exc:
        raise InputError(f"cannot parse {what} {text!r}") from exc


def _out(region, results, verdicts=()):
    return region, results, [v.as_json() for v in verdicts]


def _radius(args, sc, K):
    if args.lam is not None:
        return _scalar_arg(args.lam, "--lambda")
    if sc.lam is not None:
        return sc.lam
    return diameter(K)[0]


def _aggregate(verdicts):
    """One verdict per property; the witness is the first failure."""
    merged = {}
    for index, v in verdicts:
        slot = merged.setdefault(v.property, {"property": v.property, "pass": True, "witness": None,
                                              "checked": 0, "failed": 0, "skipped": 0})
        slot["checked"] += 1
        if v.skipped:
            slot["skipped"] += 1
        if not v.passed:
            slot["failed"] += 1
            if slot["pass"]:
                slot["pass"] = False
                slot["witness"] = {"instance": index, "detail": jsonable(v.witness)}
    return [merged[k] for k in sorted(merged)]


def run(command, sc, args):
    """Execute ``command``; returns ``(primary region, results, verdicts)``."""
    K, plane = sc.points, sc.plane
    seed = _seed(args)
    if command == "gauge":
        return _out(plane.unit_ball, {"gauges": [[p, gauge(plane, p)] for p in K.points]})
    if command == "diam":
        d, pair = diameter(K)
        return _out(convex_hull(list(pair)), {"diameter": d, "pair": list(pair)})
    if command == "radius":
        lam, c = chebyshev_radius(plane, K, seed)
        return _out(ConvexRegion("point", (c,)), {"radius": lam, "witness": c})
    if command == "chebyshev":
        lam, ch = chebyshev_set(K)
        return _out(ch, {"radius": lam, "centrable": is_centrable(K, lam)})
    if command == "bi":
        res = ball_intersection(K, _radius(args, sc, K))
        return _out(res.region, res)
    if command == "bh":
        res = ball_hull(K, _radius(args, sc, K))
        return _out(res.region, res)
    if command == "arcs":
        region, arcs = arc_hull(K)
        return _out(region, {"arcs": [{"endpoints": a.endpoints, "center": a.center, "radius": a.radius,
                                      "polyline": a.polyline} for a in arcs]})
    if command == "walk":
        w = pivot_walk(K)
        balls = [{"center": b.center, "radius": b.radius} for b in w.balls]
        return _out(w.region, {"balls": balls, "trace": w.trace, "corners": w.corners})
    if command == "complete":
        eps = None if args.epsilon is None else _scalar_arg(args.epsilon, "--epsilon")
        if args.samples > 1:
            comps = sample_completions(K, args.samples, eps, seed)
            return _out(comps[0].region, {"completions": comps, "distinct": len(comps)})
        res = complete_greedy(K, eps, seed)
        return _out(res.region, {"completions": [res], "distinct": 1})
    if command == "critical":
        lam, ch = chebyshev_set(K)
        reps = [critical_set(K, x, lam) for x in ch.vertices]
        return _out(ch, {"radius": lam, "reports": [{"center": r.center, "critical_points": r.critical_points}
                                                     for r in reps]})
    if command == "analyze":
        lam, ch = chebyshev_set(K)
        centrable = is_centrable(K, lam)
        results = {
            "radius": lam,
            "centrable": centrable,
            "bases": [base_system(K, x, lam) for x in ch.vertices],
            "degree_two_center": degree_two_center(K, seed),
        }
        if centrable:
            results["singleton_criterion"] = ch_singleton_centrable(K, lam)[0]
        return _out(ch, results, verify_mod.centers_suite(K, seed))
    if command == "illuminate":
        lam, ch = chebyshev_set(K)
        rows = []
        for x in ch.vertices:
            rep = base_system(K, x, lam)
            row = {"center": x, "degree": rep.degree, "base_system": rep.base_system}
            if rep.degree is not None:
                b = ball(plane, x, lam)
                row["unlit"] = illumination_gap(rep.base_system, b.region)
                row["illuminating"] = row["unlit"] is None
                row["critical_global"] = is_global(rep.critical_points, b)
            rows.append(row)
        return _out(ch, {"radius": lam, "bases": rows})
    if command == "verify":
        tagged = [("scenario", v) for v in verify_mod.run_all(K, seed, grid_n=args.grid)]
        for i, R in enumerate(instances(args.samples, seed)):
            tagged.extend((i, v) for v in verify_mod.run_all(R, seed * 7919 + i, grid_n=args.grid))
        verdicts = _aggregate(tagged)
        region = ball_hull(K, diameter(K)[0]).region
        failed = sum(1 for v in verdicts if not v["pass"])
        return region, {"instances": args.samples + 1, "properties": len(verdicts), "failed": failed}, verdicts
    if command == "plot":
        return ball_hull(K, diameter(K)[0]).region, {}, []
    raise InputError(f"unknown command {command}")  # pragma: no cover - argparse guards this


def build_report(args):
    sc = load_scenario(resolve_scenario(args.scenario))
    start = time.perf_counter()
    region, results, verdicts = run(args.command, sc, args)
    elapsed = time.perf_counter() - start
    report = {
        "command": args.command,
        "scenario": scenario_echo(sc),
        "seed": _seed(args),
        "regions": jsonable(region),
        "results": jsonable(results),
        "verdicts": verdicts,
        "timing": {"seconds": round(elapsed, 6)},
    }
    return sc, report


def _summary(report):
    reg = report["regions"]
    lines = [f"{report['command']} [{report['scenario']['name']}]: {reg['kind']} "
             + " ".join(f"({x}, {y})" for x, y in reg["vertices"])]
    failed = [v for v in report["verdicts"] if not v["pass"]]
    if report["verdicts"]:
        lines.append(f"{len(report['verdicts']) - len(failed)}/{len(report['verdicts'])} properties pass")
        lines.extend(f"FAIL {v['property']}" for v in failed)
    return "\n".join(lines) + "\n"


def main(argv=None):
    try:
        args = build_parser().parse_args(argv)
        show = parse_layers(args.show)
        sc, report = build_report(args)
        if args.svg or args.command == "plot":
            path = args.svg or f"{sc.name or 'figure'}.svg"
            lam = _radius(args, sc, sc.points) if args.lam is not None else None
            scene = build_scene(sc.points, lam, show, _seed(args))
            emit_svg(scene, path, show)
            report["results"]["svg"] = path
        sys.stdout.write(dumps(report) if args.json else _summary(report))
        if args.command == "verify" and report["results"]["failed"]:
            return 3
        return 0
    except InputError as exc:
        print(f"input error: {exc}", file=sys.stderr)
        return 1
    except ValueError as exc:
        if isinstance(exc, PreconditionError):
            print(f"precondition violated ({type(exc).__name__}): {exc}", file=sys.stderr)
            return 2
        print(f"input error: {exc}", file=sys.stderr)
        return 1
    except InvariantBreach as exc:
        print(f"internal invariant broken: {exc}", file=sys.stderr)
        return 3
    except OSError as exc:
        print(f"input error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
