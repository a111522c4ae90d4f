"""Minimal SVG output for convex polygons."""
from dataclasses import dataclass
from xml.sax.saxutils import escape

import numpy as np

DEFAULT_STROKES = ("#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e", "#8c564b")


@dataclass(frozen=True)
class RenderSpec:
    width: int = 400
    height: int = 400
    margin: float = 0.1
    stroke_width: float = 1.5

    def __post_init__(self):
        if self.width <= 0 or self.height <= 0:
            raise ValueError("render dimensions must be positive")


def _viewport(polygons, margin):
    pts = np.vstack([p.vertices for p in polygons])
    lo, hi = pts.min(axis=0), pts.max(axis=0)
    center = 0.5 * (lo + hi)
    half = 0.5 * max(hi[0] - lo[0], hi[1] - lo[1]) * (1.0 + 2.0 * margin)
    return center, max(half, 1e-12)


def _path(polygon, center, half, box, style, stroke_width):
    x0, y0, w, h = box
    s = 0.5 * min(w, h) / half
    cx, cy = x0 + 0.5 * w, y0 + 0.5 * h
    v = polygon.vertices
    # y axis flipped so counterclockwise stays counterclockwise on screen
    xs = cx + s * (v[:, 0] - center[0])
    ys = cy - s * (v[:, 1] - center[1])
    d = "M " + " L ".join(f"{x:.4f} {y:.4f}" for x, y in zip(xs, ys)) + " Z"
    stroke = style.get("stroke", "black")
    fill = style.get("fill", "none")
    width = style.get("stroke_width", stroke_width)
    return f'<path d="{d}" fill="{escape(fill)}" stroke="{escape(stroke)}" stroke-width="{width}"/>'


def _styled(shapes):
    out = []
    for i, item in enumerate(shapes):
        poly, style = item if isinstance(item, tuple) else (item, {})
        style = {"stroke": DEFAULT_STROKES[i % len(DEFAULT_STROKES)], **(style or {})}
        out.append((poly, style))
    return out


def svg_document(shapes, spec=RenderSpec()):
    """One panel with every polygon overlaid on a shared equal-aspect viewport."""
    shapes = _styled(shapes)
    if not shapes:
        raise ValueError("nothing to render")
    center, half = _viewport([p for p, _ in shapes], spec.margin)
    body = [_path(p, center, half, (0, 0, spec.width, spec.height), st, spec.stroke_width) for p, st in shapes]
    return _wrap(body, spec.width, spec.height)


def svg_panels(panels, titles=None, spec=RenderSpec()):
    """A 2-column grid of panels, each a list of shapes, sharing one scale."""
    if not panels:
        raise ValueError("nothing to render")
    cols = 2
    rows = (len(panels) + cols - 1) // cols
    title_h = 20 if titles else 0
    styled = [_styled(p) for p in panels]
    center, half = _viewport([poly for panel in styled for poly, _ in panel], spec.margin)
    body = []
    for i, panel in enumerate(styled):
        x0 = (i % cols) * spec.width
        y0 = (i // cols) * (spec.height + title_h)
        body.append(f'<g id="panel-{i}">')
        if titles:
            body.append(
                f'<text x="{x0 + spec.width / 2:.1f}" y="{y0 + 15}" text-anchor="middle" '
                f'font-family="sans-serif" font-size="13">{escape(titles[i])}</text>'
            )
        box = (x0, y0 + title_h, spec.width, spec.height)
        body.extend(_path(p, center, half, box, st, spec.stroke_width) for p, st in panel)
        body.append("</g>")
    return _wrap(body, cols * spec.width, rows * (spec.height + title_h))


def _wrap(body, width, height):
    head = (
        f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{width}" height="{height}" '
        f'viewBox="0 0 {width} {height}">'
    )
    return "\n".join([head, *body, "</svg>"]) + "\n"


def render_svg(shapes, spec=RenderSpec(), path=None, panels=None, titles=None):
    """Write an SVG file; returns the document text.

    With ``panels`` (a list of shape lists) the output is a grid, otherwise
    ``shapes`` are overlaid in one panel.
    """
    text = svg_panels(panels, titles, spec) if panels is not None else svg_document(shapes, spec)
    if path is not None:
        with open(path, "w") as fh:
            fh.write(text)
    return text
