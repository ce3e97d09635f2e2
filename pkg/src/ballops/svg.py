"""Deterministic SVG figures.

Coordinates are rendered as decimals with a fixed number of significant
digits.  Figures are for looking at; nothing reads them back.
"""

from decimal import Decimal, localcontext

from .arcs import arc_hull
from .completion import sample_completions
from .kernel import POINT, SEGMENT
from .lp import chebyshev_radius
from .norm import ball
from .operators import ball_hull, ball_intersection, chebyshev_set, diameter

LAYERS = ("bi", "bh", "ch", "arcs", "ball", "completions")

STYLE = {
    "bi": 'fill="#cfe3f7" fill-opacity="0.6" stroke="#3b78b5"',
    "bh": 'fill="#f7d3cf" fill-opacity="0.7" stroke="#b5443b"',
    "ch": 'fill="#7a3bb5" stroke="#7a3bb5"',
    "arcs": 'fill="none" stroke="#2e8b57"',
    "ball": 'fill="none" stroke="#555555" stroke-dasharray="4 3"',
    "completions": 'fill="none" stroke="#d98c1f" stroke-dasharray="2 2"',
    "K": 'fill="#000000" stroke="#000000"',
}


def decimal_text(value, digits=12):
    with localcontext() as ctx:
        ctx.prec = digits
        d = Decimal(int(value.numerator)) / Decimal(int(value.denominator))
    text = format(d, "f")
    if "." in text:
        text = text.rstrip("0").rstrip(".")
    return "0" if text in ("-0", "") else text


def parse_layers(text):
    if not text:
        return ()
    names = tuple(part.strip() for part in text.split(",") if part.strip())
    unknown = [n for n in names if n not in LAYERS]
    if unknown:
        raise ValueError(f"unknown layers {unknown}; choose from {','.join(LAYERS)}")
    return names


def build_scene(K, lam=None, show=(), seed=0, samples=3):
    """Geometry per layer, computed only for the layers asked for."""
    d, _ = diameter(K)
    lam = d if lam is None else lam
    scene = {"K": list(K.points)}
    if "bi" in show:
        scene["bi"] = [ball_intersection(K, lam).region]
    if "bh" in show:
        scene["bh"] = [ball_hull(K, lam).region]
    if "ch" in show:
        scene["ch"] = [chebyshev_set(K)[1]]
    if "arcs" in show and len(K) > 1:
        scene["arcs"] = [a.polyline for a in arc_hull(K)[1]]
    if "ball" in show:
        r, c = chebyshev_radius(K.plane, K)
        if r > 0:
            scene["ball"] = [ball(K.plane, c, r).region]
    if "completions" in show and len(K) > 1:
        scene["completions"] = [c.region for c in sample_completions(K, samples, seed=seed)]
    return scene


def _points_of(item):
    return list(item.vertices) if hasattr(item, "vertices") else list(item)


def render(scene, show=(), digits=12):
    pts = list(scene["K"])
    for name in show:
        for item in scene.get(name, []):
            pts.extend(_points_of(item))
    xs = [p.x for p in pts]
    ys = [p.y for p in pts]
    span = max(max(xs) - min(xs), max(ys) - min(ys)) or 1
    pad = span / 10
    x0, y0 = min(xs) - pad, -(max(ys) + pad)
    w, h = max(xs) - min(xs) + 2 * pad, max(ys) - min(ys) + 2 * pad
    r = span / 120

    def fmt(v):
        return decimal_text(v, digits)

    def coords(seq):
        return " ".join(f"{fmt(p.x)},{fmt(-p.y)}" for p in seq)

    def dot(p, style, grow=1):
        return f'<circle cx="{fmt(p.x)}" cy="{fmt(-p.y)}" r="{fmt(r * grow)}" {style}/>'

    out = [
        '<svg xmlns="http://www.w3.org/2000/svg" '
        f'viewBox="{fmt(x0)} {fmt(y0)} {fmt(w)} {fmt(h)}">'
    ]
    for name in LAYERS:
        if name not in show or name not in scene:
            continue
        style = STYLE[name]
        out.append(f'<g id="{name}" stroke-width="1.5" vector-effect="non-scaling-stroke">')
        for item in scene[name]:
            if name == "arcs":
                out.append(f'<polyline points="{coords(item)}" {style} vector-effect="non-scaling-stroke"/>')
            elif item.kind == POINT:
                out.append(dot(item.vertices[0], style, 3))
            elif item.kind == SEGMENT:
                out.append(f'<polyline points="{coords(item.vertices)}" {style} vector-effect="non-scaling-stroke"/>')
            elif not item.is_empty:
                out.append(f'<polygon points="{coords(item.vertices)}" {style} vector-effect="non-scaling-stroke"/>')
        out.append("</g>")
    out.append('<g id="K">')
    out.extend(dot(p, STYLE["K"]) for p in scene["K"])
    out.append("</g>")
    out.append("</svg>")
    return "\n".join(out) + "\n"


def emit_svg(scene, path, show=(), digits=12):
    text = render(scene, show, digits)
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(text)
    return text
