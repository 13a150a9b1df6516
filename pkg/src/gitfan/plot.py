"""Planar slice of a fan with 3-dimensional support, rendered to SVG.

Each ray ``r`` meets the slice ``{x in span(support) : sum(x) = 1}`` in the
point ``r / sum(r)``; a member of dimension d becomes a cell of dimension
d - 1.  Cells are kept as exact rational points.  Floats appear only when
writing SVG coordinates, after an isometric embedding of the slice plane.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import cmp_to_key
from typing import Sequence

from .arrangement import Fan
from .errors import UnsupportedPlot
from .exact import dot, nullspace, solve

Point2 = tuple[Fraction, Fraction]


@dataclass(frozen=True)
class SlicePlot:
    """Cells of the slice, in fan order.

    ``regions`` are convex polygons (vertices counter-clockwise in slice
    coordinates), ``edges`` are segments and ``vertices`` are points; each
    entry pairs the rays of the fan member with its 2D cell.
    """

    ambient_dim: int
    gram: tuple[tuple[Fraction, Fraction], tuple[Fraction, Fraction]]
    regions: tuple[tuple[tuple, tuple[Point2, ...]], ...]
    edges: tuple[tuple[tuple, tuple[Point2, Point2]], ...]
    vertices: tuple[tuple[tuple, Point2], ...]

    @property
    def counts(self) -> dict[str, int]:
        return {"regions": len(self.regions), "edges": len(self.edges),
                "vertices": len(self.vertices)}

    def svg(self, size: int = 480) -> str:
        return _render(self, size)


def _ccw(points: list[Point2]) -> tuple[Point2, ...]:
    cx = sum(p[0] for p in points) / len(points)
    cy = sum(p[1] for p in points) / len(points)

    def half(p):
        x, y = p[0] - cx, p[1] - cy
        return 0 if (y > 0 or (y == 0 and x > 0)) else 1

    def cmp(p, q):
        hp, hq = half(p), half(q)
        if hp != hq:
            return hp - hq
        cross = (p[0] - cx) * (q[1] - cy) - (p[1] - cy) * (q[0] - cx)
        return -1 if cross > 0 else (1 if cross < 0 else 0)

    return tuple(sorted(points, key=cmp_to_key(cmp)))


def slice_fan(f: Fan) -> SlicePlot:
    """Slice ``f`` by the all-ones functional inside the span of its support."""
    if f.max_dim != 3:
        raise UnsupportedPlot(
            f"slice plots need a 3-dimensional support; this fan's support has dimension {f.max_dim}")
    d = f.ambient_dim
    top = f.maximal_cones()[0]
    ones = (1,) * d
    u1, u2 = nullspace(list(top.span_equations) + [ones], d)
    gram = ((Fraction(dot(u1, u1)), Fraction(dot(u1, u2))),
            (Fraction(dot(u2, u1)), Fraction(dot(u2, u2))))
    rays = sorted({r for c in f.cones for r in c.rays})
    origin = tuple(Fraction(x, sum(rays[0])) for x in rays[0])

    def coords(r) -> Point2:
        s = sum(r)
        if s <= 0:
            raise UnsupportedPlot("support is not cut by the slice plane")
        q = [Fraction(x, s) - o for x, o in zip(r, origin)]
        a, b = solve([list(gram[0]), list(gram[1])], [dot(u1, q), dot(u2, q)])
        return (a, b)

    pt = {r: coords(r) for r in rays}
    regions, edges, vertices = [], [], []
    for c in f.cones:
        if c.dim == 3:
            regions.append((c.rays, _ccw([pt[r] for r in c.rays])))
        elif c.dim == 2:
            edges.append((c.rays, (pt[c.rays[0]], pt[c.rays[1]])))
        elif c.dim == 1:
            vertices.append((c.rays, pt[c.rays[0]]))
    return SlicePlot(d, gram, tuple(regions), tuple(edges), tuple(vertices))


_FILLS = ("#dbe9f6", "#fbe3c8", "#dff2d8", "#f3d9ec", "#fdf5c9", "#e2e0f5")


def _render(p: SlicePlot, size: int) -> str:
    (a, b), (_, c) = p.gram
    sa = math.sqrt(a)
    sc = math.sqrt(c - b * b / a)

    def embed(q: Point2):
        # Cholesky factor of the Gram matrix: distances become Euclidean
        return (sa * float(q[0]) + float(b) / sa * float(q[1]), sc * float(q[1]))

    pts = [embed(q) for _, q in p.vertices] or [(0.0, 0.0)]
    xs, ys = [x for x, _ in pts], [y for _, y in pts]
    span = max(max(xs) - min(xs), max(ys) - min(ys)) or 1.0
    margin = 0.08 * size
    scale = (size - 2 * margin) / span
    # centre the drawing in both directions
    ox = (size - (max(xs) - min(xs)) * scale) / 2
    oy = (size - (max(ys) - min(ys)) * scale) / 2

    def screen(q: Point2) -> tuple[str, str]:
        x, y = embed(q)
        return (f"{ox + (x - min(xs)) * scale:.3f}",
                f"{size - oy - (y - min(ys)) * scale:.3f}")

    def label(rays: Sequence) -> str:
        return " ".join("(" + ",".join(map(str, r)) + ")" for r in rays)

    counts = p.counts
    lines = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{size}" height="{size}" '
        f'viewBox="0 0 {size} {size}">',
        "<!-- slice of the fan by sum(x) = 1 -->",
        f"<!-- regions: {counts['regions']} -->",
        f"<!-- edges: {counts['edges']} -->",
        f"<!-- vertices: {counts['vertices']} -->",
        '<g id="regions" stroke="none">',
    ]
    for i, (rays, poly) in enumerate(p.regions):
        coords = " ".join(",".join(screen(q)) for q in poly)
        lines.append(f'<polygon class="region" points="{coords}" fill="{_FILLS[i % len(_FILLS)]}">'
                     f"<title>{label(rays)}</title></polygon>")
    lines.append("</g>")
    lines.append('<g id="edges" stroke="#333333" stroke-width="1.5">')
    for rays, (q0, q1) in p.edges:
        x0, y0 = screen(q0)
        x1, y1 = screen(q1)
        lines.append(f'<line class="edge" x1="{x0}" y1="{y0}" x2="{x1}" y2="{y1}">'
                     f"<title>{label(rays)}</title></line>")
    lines.append("</g>")
    lines.append('<g id="vertices" fill="#000000">')
    for rays, q in p.vertices:
        x, y = screen(q)
        lines.append(f'<circle class="vertex" cx="{x}" cy="{y}" r="3">'
                     f"<title>{label(rays)}</title></circle>")
    lines.append("</g>")
    lines.append("</svg>")
    return "\n".join(lines) + "\n"
