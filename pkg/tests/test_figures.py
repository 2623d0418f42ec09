"""Tests for SVG rendering."""

import re

import pytest

from src.core.figures import layer_color, render_svg, svg_document
from src.core.geom_core import PointSet
from src.core.peeling import PeelingTrace, TraceSource, peel
from tests.conftest import grid_trace


def view_box(svg: str) -> list[float]:
    match = re.search(r'viewBox="([^"]+)"', svg)
    assert match is not None
    return [float(value) for value in match.group(1).split()]


def test_one_element_per_layer():
    svg = svg_document(grid_trace(3))
    assert svg.count("<polygon") == 2
    assert svg.count("<circle") == 1
    assert 'data-layer="3"' in svg


def test_y_axis_points_up():
    svg = svg_document(grid_trace(3))
    assert 'points="1,-1 3,-1 3,-3 1,-3"' in svg
    min_x, min_y, width, height = view_box(svg)
    assert min_x == pytest.approx(0.9)
    assert min_y == pytest.approx(-3.1)
    assert width == pytest.approx(2.2)
    assert height == pytest.approx(2.2)


def test_grid_2_is_one_square():
    svg = svg_document(grid_trace(2))
    assert svg.count("<polygon") == 1
    assert "<circle" not in svg


def test_grid_11_nested_polygons():
    trace = grid_trace(11)
    assert svg_document(trace).count("<polygon") == sum(
        1 for layer in trace.layers if layer.is_proper
    )


def test_segment_layer():
    trace = peel(PointSet([(0, 0), (1, 0), (2, 0)]))
    svg = svg_document(trace)
    assert '<line x1="0" y1="0" x2="2" y2="0"' in svg
    assert svg.count("<circle") == 1


def test_empty_trace():
    svg = svg_document(PeelingTrace(TraceSource(), ()))
    assert 'viewBox="0 0 1 1"' in svg


def test_count_only_trace_cannot_render():
    with pytest.raises(ValueError):
        svg_document(grid_trace(5, count_only=True))


def test_colors_follow_layer_index():
    assert layer_color(1, 4) == "hsl(75.0,75%,42%)"
    assert layer_color(4, 4) == "hsl(300.0,75%,42%)"
    assert len({layer_color(i, 10) for i in range(1, 11)}) == 10


def test_render_writes_file(tmp_path):
    path = tmp_path / "grid.svg"
    render_svg(grid_trace(8), str(path))
    text = path.read_text()
    assert text.startswith("<svg")
    assert text.count("data-layer=") == grid_trace(8).tau
