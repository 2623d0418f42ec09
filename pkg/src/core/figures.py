"""SVG rendering of peeled layers."""

from __future__ import annotations

import logging

from .geom_core import DegeneracyKind
from .peeling import PeelingTrace
from .storage import atomic_write_text

logger = logging.getLogger(__name__)

MARGIN_FRACTION = 0.05
CANVAS_PX = 800


def layer_color(index: int, tau: int) -> str:
    """Stroke color whose hue moves linearly with index / tau."""
    hue = 300.0 * index / tau if tau else 0.0
    return f"hsl({hue:.1f},75%,42%)"


def _fmt(value: float) -> str:
    return f"{value:g}"


def svg_document(trace: PeelingTrace) -> str:
    """SVG text with one element per layer; y points up as in the plane."""
    polygons = trace.polygons()
    if not polygons:
        return (
            '<svg xmlns="http://www.w3.org/2000/svg" viewBox="0 0 1 1" '
            f'width="{CANVAS_PX}" height="{CANVAS_PX}"></svg>\n'
        )

    # The outer layer carries the bounding box of the whole input.
    xs = [p.x for p in polygons[0].vertices]
    ys = [p.y for p in polygons[0].vertices]
    width = max(xs) - min(xs)
    height = max(ys) - min(ys)
    margin = MARGIN_FRACTION * max(width, height, 1)
    min_x = min(xs) - margin
    min_y = -max(ys) - margin
    view_w = width + 2 * margin
    view_h = height + 2 * margin
    stroke = max(width, height, 1) / 400
    dot = stroke * 2.5

    elements = []
    tau = trace.tau
    for layer, polygon in zip(trace.layers, polygons, strict=True):
        color = layer_color(layer.index, tau)
        vs = polygon.vertices
        if polygon.kind is DegeneracyKind.PROPER:
            points = " ".join(f"{p.x},{-p.y}" for p in vs)
            elements.append(
                f'<polygon points="{points}" fill="none" stroke="{color}" '
                f'stroke-width="{_fmt(stroke)}" data-layer="{layer.index}"/>'
            )
        elif polygon.kind is DegeneracyKind.SEGMENT:
            a, b = vs
            elements.append(
                f'<line x1="{a.x}" y1="{-a.y}" x2="{b.x}" y2="{-b.y}" stroke="{color}" '
                f'stroke-width="{_fmt(stroke)}" data-layer="{layer.index}"/>'
            )
        else:
            p = vs[0]
            elements.append(
                f'<circle cx="{p.x}" cy="{-p.y}" r="{_fmt(dot)}" fill="{color}" '
                f'data-layer="{layer.index}"/>'
            )

    header = (
        '<svg xmlns="http://www.w3.org/2000/svg" '
        f'viewBox="{_fmt(min_x)} {_fmt(min_y)} {_fmt(view_w)} {_fmt(view_h)}" '
        f'width="{CANVAS_PX}" height="{CANVAS_PX}">'
    )
    title = f"<title>{trace.source.label()}: {tau} layers</title>"
    return "\n".join([header, title, *elements, "</svg>"]) + "\n"


def render_svg(trace: PeelingTrace, path: str) -> str:
    """Write the nested layer picture of a full trace to ``path``."""
    logger.info(f"Rendering {trace.tau} layers of {trace.source.label()} to {path}")
    return atomic_write_text(path, svg_document(trace))
