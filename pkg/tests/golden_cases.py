"""Curated CLI reports kept byte-exact under tests/golden/.

Run this file to rewrite the golden files after an intended output change.
"""

from pathlib import Path

from ballops.cli import build_parser, build_report
from ballops.report import dumps, without_timing

GOLDEN = Path(__file__).parent / "golden"
SCENARIOS = ("linf_pair", "l1_pair", "linf_triangle")
COMMANDS = ("gauge", "diam", "radius", "chebyshev", "bi", "bh", "arcs", "walk",
            "complete", "critical", "analyze", "illuminate")
CASES = [(c, s) for s in SCENARIOS for c in COMMANDS]


def report(command, scenario, *flags):
    args = build_parser().parse_args([command, "--scenario", scenario, "--seed", "0", *flags])
    return build_report(args)[1]


def body(command, scenario):
    return dumps(without_timing(report(command, scenario)))


def path_for(command, scenario):
    return GOLDEN / f"{scenario}.{command}.json"


if __name__ == "__main__":
    GOLDEN.mkdir(exist_ok=True)
    for command, scenario in CASES:
        path_for(command, scenario).write_text(body(command, scenario), encoding="utf-8")
    print(f"wrote {len(CASES)} golden reports")
