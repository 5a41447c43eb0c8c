"""Minimal SVG rendering of a tropical quartic and its bitangent classes.

Everything is drawn in curve coordinates and flipped to screen
orientation by a single group transform; rays are clipped to the
bounding box of the drawing.
"""

from __future__ import annotations

from fractions import Fraction
from xml.etree import ElementTree as ET

from .classes import BitangentClass
from .curve import TropicalQuartic
from .intersect import LINE_DIRECTIONS

CLASS_COLORS = (
    "#d62728", "#1f77b4", "#2ca02c", "#9467bd",
    "#ff7f0e", "#8c564b", "#17becf",
)


def _bbox(curve: TropicalQuartic, margin: Fraction):
    xs = [v[0] for v in curve.vertices]
    ys = [v[1] for v in curve.vertices]
    return (min(xs) - margin, min(ys) - margin,
            max(xs) + margin, max(ys) + margin)


def _clip_ray(base, direction, box):
    """Endpoint of the ray from base clipped to the box."""
    x0, y0, x1, y1 = box
    bx, by = base
    dx, dy = direction
    ts = []
    if dx:
        ts.append(((x1 if dx > 0 else x0) - bx) / dx)
    if dy:
        ts.append(((y1 if dy > 0 else y0) - by) / dy)
    t = min(t for t in ts if t >= 0) if ts else Fraction(0)
    return (bx + t * dx, by + t * dy)


def _fmt(x) -> str:
    return f"{float(x):.3f}"


def _line(parent, p, q, color, width, dash=None):
    el = ET.SubElement(parent, "line", {
        "x1": _fmt(p[0]), "y1": _fmt(p[1]),
        "x2": _fmt(q[0]), "y2": _fmt(q[1]),
        "stroke": color, "stroke-width": str(width),
        "stroke-linecap": "round",
    })
    if dash:
        el.set("stroke-dasharray", dash)
    return el


def _dot(parent, p, color, r):
    ET.SubElement(parent, "circle", {
        "cx": _fmt(p[0]), "cy": _fmt(p[1]), "r": str(r), "fill": color,
    })


def _draw_line_vertex(parent, q, box, color):
    for d in LINE_DIRECTIONS:
        _line(parent, q, _clip_ray(q, d, box), color, 0.06, dash="0.15,0.15")
    _dot(parent, q, color, 0.1)


def render_svg(
    curve: TropicalQuartic,
    classes: list[BitangentClass] | None = None,
    scale: float = 40.0,
) -> str:
    box = _bbox(curve, Fraction(3))
    x0, y0, x1, y1 = box
    w = float(x1 - x0) * scale
    h = float(y1 - y0) * scale
    svg = ET.Element("svg", {
        "xmlns": "http://www.w3.org/2000/svg",
        "width": f"{w:.0f}", "height": f"{h:.0f}",
        "viewBox": f"0 0 {w:.3f} {h:.3f}",
    })
    # y grows upward in curve coordinates
    g = ET.SubElement(svg, "g", {
        "transform": (
            f"scale({scale},{-scale}) translate({-float(x0)},{-float(y1)})"
        ),
    })
    for e in curve.bounded_edges:
        _line(g, curve.vertices[e.v1], curve.vertices[e.v2],
              "#222222", 0.08)
    for r in curve.rays:
        _line(g, curve.vertices[r.vertex],
              _clip_ray(curve.vertices[r.vertex], r.direction, box),
              "#222222", 0.08)
    for v in curve.vertices:
        _dot(g, v, "#222222", 0.09)
    for idx, B in enumerate(classes or []):
        color = CLASS_COLORS[idx % len(CLASS_COLORS)]
        for cell in B.cells:
            _draw_line_vertex(g, cell.sample, box, color)
    return ET.tostring(svg, encoding="unicode")
