"""Tests for the peeling process and its reference implementation."""

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from src.core.constructions import GridSpec, SquaresSpec, make_grid, make_nested_squares
from src.core.geom_core import Point, PointSet, is_centrally_symmetric
from src.core.peeling import (
    TraceMode,
    convex_depth,
    peel,
    peel_naive,
    tau_of,
)
from tests.conftest import grid_trace, layer_sizes, squares_trace

coords = st.integers(min_value=-10, max_value=10)
point_sets = st.lists(st.tuples(coords, coords), max_size=40).map(PointSet)


class TestExamples:
    def test_grid_11_first_layers(self):
        assert layer_sizes(grid_trace(11))[:3] == [4, 8, 8]

    def test_grid_1(self):
        trace = peel(make_grid(GridSpec(1)))
        assert trace.tau == 1
        assert layer_sizes(trace) == [1]

    def test_grid_3(self):
        trace = peel(make_grid(GridSpec(3)))
        assert trace.tau == 3
        assert layer_sizes(trace) == [4, 4, 1]
        diamond = trace.layers[1].polygon
        assert set(diamond.vertices) == {Point(2, 1), Point(3, 2), Point(2, 3), Point(1, 2)}
        assert trace.layers[2].polygon.vertices == (Point(2, 2),)

    def test_indices_start_at_one(self):
        assert [layer.index for layer in grid_trace(5).layers] == list(
            range(1, grid_trace(5).tau + 1)
        )

    def test_empty_input(self):
        assert peel(PointSet()).tau == 0
        assert peel_naive(PointSet()).tau == 0
        assert tau_of(PointSet()) == 0


class TestNaive:
    def test_grid_3_matches_fast_path(self):
        points = make_grid(GridSpec(3))
        assert peel_naive(points) == peel(points)

    def test_grid_2(self):
        trace = peel_naive(make_grid(GridSpec(2)))
        assert trace.tau == 1
        assert layer_sizes(trace) == [4]


class TestTau:
    def test_grid_1(self):
        assert tau_of(make_grid(GridSpec(1))) == 1

    def test_grid_3(self):
        assert tau_of(make_grid(GridSpec(3))) == 3

    def test_grid_11_matches_trace(self):
        assert tau_of(make_grid(GridSpec(11))) == grid_trace(11).tau


class TestFirstLayers:
    @pytest.mark.parametrize("n", [11, 16, 32, 64])
    def test_four_eight_eight(self, n):
        assert layer_sizes(grid_trace(n, count_only=True))[:3] == [4, 8, 8]

    def test_fails_for_small_n(self):
        assert layer_sizes(grid_trace(5))[:3] == [4, 8, 4]

    def test_smallest_n_with_four_eight_eight(self):
        holds = [n for n in range(1, 41) if layer_sizes(grid_trace(n))[:3] == [4, 8, 8]]
        assert holds == list(range(6, 41))


class TestOracleEquivalence:
    @pytest.mark.parametrize("n", range(1, 41))
    def test_grid(self, n):
        points = make_grid(GridSpec(n))
        assert peel(points) == peel_naive(points)

    @pytest.mark.parametrize("k", range(1, 9))
    def test_nested_squares(self, k):
        points = make_nested_squares(SquaresSpec(k))
        assert peel(points) == peel_naive(points)

    @given(point_sets)
    @settings(max_examples=150, deadline=None)
    def test_random_sets(self, points):
        assert peel(points) == peel_naive(points)


class TestTraceInvariants:
    @pytest.mark.parametrize("n", [1, 2, 3, 7, 12, 25, 40])
    def test_conservation(self, n):
        assert grid_trace(n).total_points == n * n

    @given(point_sets)
    @settings(max_examples=100, deadline=None)
    def test_conservation_random(self, points):
        trace = peel(points)
        removed = [p for poly in trace.polygons() for p in poly.vertices]
        assert len(removed) == len(set(removed)) == len(points)
        assert set(removed) == set(points)

    @pytest.mark.parametrize("n", [4, 9, 17, 30])
    def test_layers_nest(self, n):
        polygons = grid_trace(n).polygons()
        for outer, inner in zip(polygons, polygons[1:]):
            corners = set(outer.vertices)
            for p in inner.vertices:
                assert outer.contains(p)
                assert p not in corners

    @pytest.mark.parametrize("n", [6, 15, 33])
    def test_area_non_increasing(self, n):
        areas = [layer.doubled_area for layer in grid_trace(n).layers]
        assert all(a >= b for a, b in zip(areas, areas[1:]))

    @pytest.mark.parametrize("n", range(1, 31))
    def test_grid_layers_centrally_symmetric(self, n):
        for polygon in grid_trace(n).polygons():
            assert is_centrally_symmetric(polygon.vertices)

    @pytest.mark.parametrize("k", range(1, 17))
    def test_squares_layers_centrally_symmetric(self, k):
        for polygon in squares_trace(k).polygons():
            assert is_centrally_symmetric(polygon.vertices)

    def test_tau_equals_layer_count(self):
        trace = grid_trace(20)
        assert trace.tau == len(trace.layers)


class TestLayerSize:
    @pytest.mark.slow
    @pytest.mark.parametrize("n", [64, 128, 256])
    def test_max_layer_grows_like_two_thirds_power(self, n):
        largest = max(layer_sizes(grid_trace(n, count_only=True)))
        assert largest / n ** (2 / 3) < 10


class TestModes:
    def test_count_only_keeps_measures(self):
        full = grid_trace(15)
        lean = peel(make_grid(GridSpec(15)), mode=TraceMode.COUNT_ONLY)
        assert layer_sizes(lean) == layer_sizes(full)
        assert [layer.doubled_area for layer in lean.layers] == [
            layer.doubled_area for layer in full.layers
        ]
        assert all(layer.polygon is None for layer in lean.layers)
        with pytest.raises(ValueError):
            lean.polygons()


class TestConvexDepth:
    def test_grid_3(self):
        depth = convex_depth(make_grid(GridSpec(3)))
        assert depth[Point(1, 1)] == 1
        assert depth[Point(2, 1)] == 2
        assert depth[Point(2, 2)] == 3

    def test_every_point_gets_a_depth(self):
        points = make_grid(GridSpec(9))
        depth = convex_depth(points)
        assert set(depth) == set(points)
        assert max(depth.values()) == grid_trace(9).tau
