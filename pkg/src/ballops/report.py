"""Scenario files and JSON reports.

Rationals travel as strings (``"p/q"`` or integers) so reports are exact and
byte-stable.  Decimal strings are accepted on input and converted exactly.
"""

import json
from dataclasses import dataclass, fields, is_dataclass
from numbers import Rational

from .errors import InputError
from .kernel import ConvexRegion, Point, convex_hull, point
from .norm import validate_plane
from .operators import PointSet
from .scalar import Q, as_scalar, scalar_str


@dataclass(frozen=True)
class Scenario:
    name: str
    plane: object
    points: PointSet
    lam: object = None
    raw: dict = None


def _num(value, where):
    if isinstance(value, bool) or not isinstance(value, (str, int)):
        raise InputError(f"{where}: numbers must be strings like '1/2' or '0.25', got {value!r}")
    try:
        return as_scalar(value)
    except (ValueError, ZeroDivisionError) as exc:
        raise InputError(f"{where}: cannot parse {value!r}") from exc


def _pairs(values, where):
    if not isinstance(values, list) or not values:
        raise InputError(f"{where} must be a non-empty list of [x, y] pairs")
    out = []
    for i, pair in enumerate(values):
        if not isinstance(pair, list) or len(pair) != 2:
            raise InputError(f"{where}[{i}] must be an [x, y] pair")
        out.append(Point(_num(pair[0], f"{where}[{i}]"), _num(pair[1], f"{where}[{i}]")))
    return out


def parse_scenario(data):
    if not isinstance(data, dict):
        raise InputError("scenario must be a JSON object")
    for key in ("unit_ball", "points"):
        if key not in data:
            raise InputError(f"scenario is missing '{key}'")
    plane = validate_plane(_pairs(data["unit_ball"], "unit_ball"))
    K = PointSet(plane, _pairs(data["points"], "points"))
    lam = data.get("lambda")
    lam = None if lam is None else _num(lam, "lambda")
    return Scenario(str(data.get("name", "")), plane, K, lam, data)


def load_scenario(path):
    try:
        with open(path, encoding="utf-8") as fh:
            data = json.load(fh)
    except OSError as exc:
        raise InputError(f"cannot read scenario {path}: {exc}") from exc
    except json.JSONDecodeError as exc:
        raise InputError(f"scenario {path} is not valid JSON: {exc}") from exc
    return parse_scenario(data)


def scenario_echo(sc):
    return {
        "name": sc.name,
        "unit_ball": jsonable(list(sc.plane.unit_ball.vertices)),
        "points": jsonable(list(sc.points.points)),
        "lambda": None if sc.lam is None else scalar_str(sc.lam),
    }


def jsonable(obj):
    """Plain JSON data for results; scalars become exact strings."""
    if obj is None or isinstance(obj, (bool, str)):
        return obj
    if isinstance(obj, int):
        return obj  # counts; coordinates are always rationals
    if isinstance(obj, Point):
        return [scalar_str(obj.x), scalar_str(obj.y)]
    if isinstance(obj, ConvexRegion):
        return {"kind": obj.kind, "vertices": [jsonable(v) for v in obj.vertices]}
    if isinstance(obj, (Rational, Q)):
        return scalar_str(obj)
    if isinstance(obj, PointSet):
        return [jsonable(p) for p in obj.points]
    if is_dataclass(obj):
        return {f.name: jsonable(getattr(obj, f.name)) for f in fields(obj) if f.name not in ("plane",)}
    if isinstance(obj, dict):
        return {str(k): jsonable(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [jsonable(v) for v in obj]
    raise TypeError(f"cannot serialise {type(obj).__name__}")


def parse_region(data):
    """Inverse of :func:`jsonable` for regions; rejects non-canonical input."""
    pts = tuple(point(x, y) for x, y in data["vertices"])
    region = ConvexRegion(data["kind"], pts)
    canon = convex_hull(pts) if pts else region
    if canon != region:
        raise InputError("region vertices are not in canonical order")
    return region


def dumps(report):
    return json.dumps(report, sort_keys=True, indent=2) + "\n"


def without_timing(report):
    return {k: v for k, v in report.items() if k != "timing"}
