"""SVG rendering of drawings.

    Vertices become circles, edges line segments and, optionally, every
    fragment cone a translucent wedge. The drawing's bounding box is fitted
    into the canvas with the y axis pointing up; numbers are written with six
    decimals, so identical drawings give byte-identical documents.

    To test this module run: uv run -m greedy_layout.svg
"""

import math
from dataclasses import dataclass

from .drawing import Drawing


@dataclass(frozen=True)
class SvgOptions:
    """Canvas size and styling; cones=True adds the opening-cone overlays."""
    cones: bool = False
    width: int = 800
    height: int = 800
    margin: int = 20
    vertex_radius: float = 3.0
    cone_radius: float = 40.0
    stroke: str = "black"
    fill: str = "white"
    cone_fill: str = "#4a90d9"


def _num(x: float) -> str:
    text = f"{x:.6f}"
    return "0.000000" if text == "-0.000000" else text


def _attrs(style: dict) -> str:
    return "".join(f' {k}="{v}"' for k, v in style.items())


def line(x1: float, y1: float, x2: float, y2: float, style: dict) -> str:
    return f'<line x1="{_num(x1)}" y1="{_num(y1)}" x2="{_num(x2)}" y2="{_num(y2)}"{_attrs(style)}/>'


def circle(cx: float, cy: float, r: float, style: dict) -> str:
    return f'<circle cx="{_num(cx)}" cy="{_num(cy)}" r="{_num(r)}"{_attrs(style)}/>'


def wedge(cx: float, cy: float, r: float, start: float, end: float, style: dict) -> str:
    """Circular sector from direction start to end (degrees, counter-clockwise, y up)."""
    sx, sy = cx + r * math.cos(math.radians(start)), cy - r * math.sin(math.radians(start))
    ex, ey = cx + r * math.cos(math.radians(end)), cy - r * math.sin(math.radians(end))
    large = 1 if end - start > 180 else 0
    d = (
        f"M {_num(cx)} {_num(cy)} L {_num(sx)} {_num(sy)} "
        f"A {_num(r)} {_num(r)} 0 {large} 0 {_num(ex)} {_num(ey)} Z"
    )
    return f'<path d="{d}"{_attrs(style)}/>'


def emit_svg(dr: Drawing, options: SvgOptions | None = None) -> str:
    """SVG 1.1 document of a drawing."""
    options = options or SvgOptions()
    points = dr.float_coords()
    xs = [p[0] for p in points.values()]
    ys = [p[1] for p in points.values()]
    span = max(max(xs) - min(xs), max(ys) - min(ys)) or 1.0
    scale = min(options.width, options.height) - 2 * options.margin
    scale /= span

    def canvas(p: tuple[float, float]) -> tuple[float, float]:
        return (
            options.margin + (p[0] - min(xs)) * scale,
            options.height - options.margin - (p[1] - min(ys)) * scale,
        )

    out = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{options.width}" '
        f'height="{options.height}" viewBox="0 0 {options.width} {options.height}">',
    ]
    if options.cones:
        out.append('<g class="cones">')
        style = {"fill": options.cone_fill, "fill-opacity": "0.25", "stroke": "none"}
        for cone in dr.cones:
            cx, cy = canvas(points[cone.vertex])
            half = cone.opening / 2
            out.append(wedge(cx, cy, options.cone_radius, cone.bisector - half, cone.bisector + half, style))
        out.append("</g>")

    out.append('<g class="edges">')
    for u, v in dr.graph.edges:
        (x1, y1), (x2, y2) = canvas(points[u]), canvas(points[v])
        out.append(line(x1, y1, x2, y2, {"stroke": options.stroke, "stroke-width": 1}))
    out.append("</g>")

    out.append('<g class="vertices">')
    for v in dr.graph.vertices:
        cx, cy = canvas(points[v])
        out.append(circle(cx, cy, options.vertex_radius, {"fill": options.fill, "stroke": options.stroke, "id": v}))
    out.append("</g>")
    out.append("</svg>")
    return "\n".join(out) + "\n"


if __name__ == "__main__":
    from greedy_graph import path_graph

    print(emit_svg(Drawing(path_graph(2), {"p0": (0, 0), "p1": (1, 0), "p2": (2, 0)})))
