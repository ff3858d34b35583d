"""SVG drawing of a placed framework.

Class F1 edges are drawn solid black, class F2 edges gray. A reflection's
mirror is drawn as a dashed line, a rotation centre as a small cross.
Exact coordinates are kept as ``data-x``/``data-y`` attributes.
"""
from __future__ import annotations

from typing import List, Optional
from xml.sax.saxutils import quoteattr

from .fileio import fraction_text
from .polynorm import FacetClass, IsometryKind, LinearIsometry, Placement, QuadNorm, try_coloring
from .symcore import Graph

SIZE = 800
MARGIN = 0.05
STROKE = {FacetClass.F1: "#000000", FacetClass.F2: "#999999"}


def _fixed_line(tau: LinearIsometry):
    (a, b), (c, d) = tau.matrix
    a -= 1
    d -= 1
    if (a, b) != (0, 0):
        return (-b, a)
    return (-d, c)


def render_svg(graph: Graph, p: Placement, norm: QuadNorm, tau: Optional[LinearIsometry] = None) -> str:
    xs = [float(p[v][0]) for v in graph.vertices] + [0.0]
    ys = [float(p[v][1]) for v in graph.vertices] + [0.0]
    lo_x, hi_x, lo_y, hi_y = min(xs), max(xs), min(ys), max(ys)
    span = max(hi_x - lo_x, hi_y - lo_y) or 1.0
    inner = SIZE * (1 - 2 * MARGIN)
    cx, cy = (lo_x + hi_x) / 2, (lo_y + hi_y) / 2

    def sx(x: float) -> float:
        return round(SIZE / 2 + (x - cx) * inner / span, 3)

    def sy(y: float) -> float:
        # SVG y grows downwards
        return round(SIZE / 2 - (y - cy) * inner / span, 3)

    out: List[str] = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{SIZE}" height="{SIZE}" '
        f'viewBox="0 0 {SIZE} {SIZE}">',
        f'<rect width="{SIZE}" height="{SIZE}" fill="#ffffff"/>',
    ]
    if tau is not None and tau.kind in (IsometryKind.REFLECTION_PRESERVING, IsometryKind.REFLECTION_SWAPPING):
        d = _fixed_line(tau)
        length = span * 2
        scale_ = length / max(abs(float(d[0])), abs(float(d[1])))
        x1, y1 = -float(d[0]) * scale_, -float(d[1]) * scale_
        out.append(f'<line class="mirror" x1="{sx(x1)}" y1="{sy(y1)}" x2="{sx(-x1)}" y2="{sy(-y1)}" '
                   'stroke="#3366cc" stroke-width="1.5" stroke-dasharray="8,6"/>')
    elif tau is not None and tau.kind in (IsometryKind.HALF_TURN, IsometryKind.QUARTER_TURN):
        ox, oy = sx(0.0), sy(0.0)
        out.append(f'<g class="centre" stroke="#3366cc" stroke-width="2">'
                   f'<line x1="{ox - 8}" y1="{oy}" x2="{ox + 8}" y2="{oy}"/>'
                   f'<line x1="{ox}" y1="{oy - 8}" x2="{ox}" y2="{oy + 8}"/></g>')
    col, _ = try_coloring(graph, p, norm)
    for e in graph.sorted_edges():
        u, w = e
        cls = col.colors[e] if col is not None else None
        colour = STROKE[cls] if cls is not None else "#cc0000"
        name = cls.name if cls is not None else "unpositioned"
        out.append(f'<line class="edge {name}" x1="{sx(float(p[u][0]))}" y1="{sy(float(p[u][1]))}" '
                   f'x2="{sx(float(p[w][0]))}" y2="{sy(float(p[w][1]))}" stroke="{colour}" stroke-width="3"/>')
    for v in graph.vertices:
        x, y = p[v]
        out.append(f'<circle class="vertex" cx="{sx(float(x))}" cy="{sy(float(y))}" r="7" fill="#ffffff" '
                   f'stroke="#000000" stroke-width="2" data-id="{v}" '
                   f'data-x={quoteattr(fraction_text(x))} data-y={quoteattr(fraction_text(y))}/>')
        out.append(f'<text x="{sx(float(x)) + 9}" y="{sy(float(y)) - 9}" font-size="14" '
                   f'font-family="sans-serif">{v}</text>')
    out.append("</svg>")
    return "\n".join(out) + "\n"
