"""SVG rendering of lattice paths and necklace diagrams.

3D paths use a fixed isometric projection: the x and y axes point 30 degrees
below the horizontal to the right and left, z points straight up.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Optional
from xml.sax.saxutils import escape

from .geometry import LatticePath, PlaneSpec
from .words import CircularWord

COS30 = math.cos(math.pi / 6)
SIN30 = 0.5
STEP_COLORS = ("#1f4fd8", "#1a9a3a", "#d62728")
LETTER_COLORS = ("#1f4fd8", "#1a9a3a", "#d62728", "#9467bd", "#8c564b", "#e377c2")


@dataclass(frozen=True)
class SvgStyle:
    scale: float = 40.0
    margin: float = 20.0
    stroke_width: float = 3.0
    guide: bool = True


def _document(width: float, height: float, body: list[str], title: str) -> str:
    head = (
        '<?xml version="1.0" encoding="UTF-8"?>\n'
        f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" '
        f'width="{width:.1f}" height="{height:.1f}" viewBox="0 0 {width:.1f} {height:.1f}">\n'
        f"<title>{escape(title)}</title>\n"
    )
    return head + "\n".join(body) + "\n</svg>\n"


def _project(point: tuple[int, ...]) -> tuple[float, float]:
    if len(point) == 2:
        x, y = point
        return float(x), float(-y)
    x, y, z = point
    return (x - y) * COS30, (x + y) * SIN30 - z


def svg_path(path: LatticePath, style: SvgStyle = SvgStyle(),
             slope: Optional[tuple[int, int]] = None) -> str:
    """One ``<line class="step">`` per unit step, plus an optional guide line.

    For a 2D path ``slope=(zeros, ones)`` draws ``y = (ones/zeros) x``; for a 3D
    path ``slope=(m, n)`` draws the segment from the origin to the end point
    along the plane's diagonal.
    """
    pts = [_project(p) for p in path.points()]
    xs = [p[0] for p in pts]
    ys = [p[1] for p in pts]
    sc, mg = style.scale, style.margin
    x0, y0 = min(xs), min(ys)
    width = (max(xs) - x0) * sc + 2 * mg
    height = (max(ys) - y0) * sc + 2 * mg

    def tx(p):
        return (p[0] - x0) * sc + mg, (p[1] - y0) * sc + mg

    body = []
    if style.guide and slope is not None:
        if path.dimension == 2:
            k, n = slope
            x_end = path.end[0]
            a, b = tx((0.0, 0.0)), tx((float(x_end), -x_end * n / k))
        else:
            a, b = tx(_project((0, 0, 0))), tx(_project(path.end))
        body.append(
            f'<line class="guide" x1="{a[0]:.2f}" y1="{a[1]:.2f}" x2="{b[0]:.2f}" y2="{b[1]:.2f}" '
            f'stroke="#888888" stroke-dasharray="4 3" stroke-width="1"/>'
        )
    for s, p, q in zip(path.steps, pts, pts[1:]):
        a, b = tx(p), tx(q)
        body.append(
            f'<line class="step step-{s}" x1="{a[0]:.2f}" y1="{a[1]:.2f}" x2="{b[0]:.2f}" y2="{b[1]:.2f}" '
            f'stroke="{STEP_COLORS[s]}" stroke-width="{style.stroke_width}" stroke-linecap="round"/>'
        )
    word = "".join(str(s) for s in path.steps)
    return _document(width, height, body, f"{path.dimension}D lattice path {word}")


def svg_plane_path(plane: PlaneSpec, path: LatticePath, style: SvgStyle = SvgStyle()) -> str:
    return svg_path(path, style, slope=(plane.m, plane.n))


def svg_necklace(cw: CircularWord, style: SvgStyle = SvgStyle()) -> str:
    """Letters on an oriented circle, one ``<polygon>`` per letter joining its positions."""
    ell = cw.length
    radius = style.scale * max(2.0, ell / 3)
    c = radius + style.margin
    size = 2 * c
    pos = []
    for i in range(ell):
        t = 2 * math.pi * i / ell - math.pi / 2
        pos.append((c + radius * math.cos(t), c + radius * math.sin(t)))
    body = [
        f'<circle class="orbit" cx="{c:.2f}" cy="{c:.2f}" r="{radius:.2f}" fill="none" '
        f'stroke="#cccccc" stroke-width="1"/>'
    ]
    # clockwise orientation marker between vertex 0 and vertex 1
    a = pos[0]
    body.append(
        f'<path class="orientation" d="M {a[0]:.2f} {a[1]:.2f} l -6 -5 m 6 5 l -6 5" '
        f'stroke="#444444" fill="none"/>'
    )
    letters = sorted(set(cw.canonical))
    for letter in letters:
        idx = [i for i, a in enumerate(cw.canonical) if a == letter]
        coords = " ".join(f"{pos[i][0]:.2f},{pos[i][1]:.2f}" for i in idx)
        color = LETTER_COLORS[letter % len(LETTER_COLORS)]
        body.append(
            f'<polygon class="letter letter-{letter}" points="{coords}" fill="none" '
            f'stroke="{color}" stroke-width="{style.stroke_width / 2}"/>'
        )
    for i, (x, y) in enumerate(pos):
        letter = cw.canonical[i]
        color = LETTER_COLORS[letter % len(LETTER_COLORS)]
        body.append(f'<circle class="vertex" cx="{x:.2f}" cy="{y:.2f}" r="4" fill="{color}"/>')
    return _document(size, size, body, f"necklace [{cw}]")
