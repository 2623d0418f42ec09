"""Tests for the exact geometric kernel."""

import math

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from src.core.constructions import GridSpec, make_grid
from src.core.errors import CapacityError
from src.core.geom_core import (
    POINT_CAPACITY,
    ConvexPolygon,
    DegeneracyKind,
    Orientation,
    Point,
    PointSet,
    cross,
    is_centrally_symmetric,
    orientation,
    polygon_doubled_area,
    polygon_perimeter,
    strict_hull,
)

coords = st.integers(min_value=-12, max_value=12)
point_sets = st.lists(st.tuples(coords, coords), max_size=30).map(PointSet)

UNIT_SQUARE = ConvexPolygon.from_vertices([(0, 0), (1, 0), (1, 1), (0, 1)])


class TestOrientation:
    def test_left_turn(self):
        assert orientation(Point(0, 0), Point(1, 0), Point(0, 1)) is Orientation.LEFT

    def test_collinear(self):
        assert orientation(Point(0, 0), Point(1, 1), Point(2, 2)) is Orientation.COLLINEAR

    def test_right_turn(self):
        assert orientation(Point(0, 0), Point(0, 1), Point(1, 0)) is Orientation.RIGHT

    def test_exact_at_capacity(self):
        big = POINT_CAPACITY
        a, b, c = Point(-big, -big), Point(big, big - 1), Point(big - 1, big)
        # Floats would round this cross product away.
        assert cross(a, b, c) == (2 * big) * (2 * big) - (2 * big - 1) * (2 * big - 1)
        assert orientation(a, b, c) is Orientation.LEFT


class TestPointSet:
    def test_sorted_and_deduplicated(self):
        ps = PointSet([(2, 1), (1, 5), (2, 1), (1, 2)])
        assert ps.points == (Point(1, 2), Point(1, 5), Point(2, 1))
        assert len(ps) == 3

    def test_without_keeps_order(self):
        ps = PointSet([(0, 0), (1, 1), (2, 2)]).without([Point(1, 1)])
        assert ps.points == (Point(0, 0), Point(2, 2))

    def test_membership(self):
        ps = PointSet([(0, 0), (3, 4)])
        assert Point(3, 4) in ps
        assert Point(4, 3) not in ps

    def test_capacity_violation(self):
        with pytest.raises(CapacityError):
            PointSet([(POINT_CAPACITY + 1, 0)])


class TestStrictHull:
    def test_grid_3_excludes_edge_midpoints(self):
        hull = strict_hull(make_grid(GridSpec(3)))
        assert hull.vertices == (Point(1, 1), Point(3, 1), Point(3, 3), Point(1, 3))
        assert hull.kind is DegeneracyKind.PROPER

    def test_collinear_set_is_segment(self):
        hull = strict_hull(PointSet([(0, 0), (1, 0), (2, 0)]))
        assert hull.kind is DegeneracyKind.SEGMENT
        assert hull.vertices == (Point(0, 0), Point(2, 0))

    def test_point_on_bottom_edge_excluded(self):
        hull = strict_hull(PointSet([(0, 0), (1, 0), (2, 0), (1, 1)]))
        assert hull.vertices == (Point(0, 0), Point(2, 0), Point(1, 1))

    def test_empty_and_single(self):
        assert strict_hull(PointSet()).kind is DegeneracyKind.EMPTY
        single = strict_hull(PointSet([(4, -2)]))
        assert single.kind is DegeneracyKind.SINGLE_POINT
        assert single.vertices == (Point(4, -2),)

    @given(point_sets)
    @settings(max_examples=150, deadline=None)
    def test_every_point_inside_or_on(self, points):
        hull = strict_hull(points)
        assert all(hull.contains(p) for p in points)

    @given(point_sets)
    @settings(max_examples=150, deadline=None)
    def test_idempotent_on_own_vertices(self, points):
        hull = strict_hull(points)
        again = strict_hull(PointSet(hull.vertices))
        assert again.vertices == hull.vertices

    @given(point_sets)
    @settings(max_examples=100, deadline=None)
    def test_no_vertex_between_collinear_points(self, points):
        pts = list(points)
        for v in strict_hull(points).vertices:
            for a in pts:
                for b in pts:
                    if v in (a, b) or a == b:
                        continue
                    strictly_between = cross(a, b, v) == 0 and min(a, b) < v < max(a, b)
                    assert not strictly_between

    @given(st.lists(st.tuples(coords, coords), max_size=18).map(PointSet))
    @settings(max_examples=80, deadline=None)
    def test_vertices_are_exactly_the_corners(self, points):
        # p is a corner iff removing it changes the hull, i.e. p leaves CH(P \ {p}).
        corners = {p for p in points if not strict_hull(points.without([p])).contains(p)}
        assert set(strict_hull(points).vertices) == corners

    def test_canonical_start_and_ccw(self):
        hull = strict_hull(PointSet([(5, 5), (0, 3), (3, 0), (0, 0), (2, 2)]))
        assert hull.vertices[0] == min(hull.vertices)
        assert polygon_doubled_area(hull) > 0


class TestConvexPolygon:
    def test_rotates_to_canonical_start(self):
        poly = ConvexPolygon.from_vertices([(1, 1), (0, 1), (0, 0), (1, 0)])
        assert poly.vertices == UNIT_SQUARE.vertices

    def test_rejects_clockwise_cycle(self):
        with pytest.raises(ValueError):
            ConvexPolygon.from_vertices([(0, 0), (0, 1), (1, 1), (1, 0)])

    def test_rejects_collinear_triple(self):
        with pytest.raises(ValueError):
            ConvexPolygon.from_vertices([(0, 0), (1, 0), (2, 0), (1, 1)])


class TestMeasures:
    def test_doubled_area_unit_square(self):
        assert polygon_doubled_area(UNIT_SQUARE) == 2

    def test_doubled_area_segment(self):
        segment = ConvexPolygon.from_vertices([(0, 0), (3, 4)])
        assert polygon_doubled_area(segment) == 0

    def test_doubled_area_triangle(self):
        triangle = ConvexPolygon.from_vertices([(0, 0), (2, 0), (0, 2)])
        assert polygon_doubled_area(triangle) == 4

    def test_perimeter_unit_square(self):
        assert polygon_perimeter(UNIT_SQUARE) == pytest.approx(4.0)

    def test_perimeter_single_point(self):
        assert polygon_perimeter(ConvexPolygon.from_vertices([(7, 7)])) == 0.0

    def test_perimeter_segment_counts_both_sides(self):
        segment = ConvexPolygon.from_vertices([(0, 0), (3, 4)])
        assert polygon_perimeter(segment) == pytest.approx(10.0)

    @pytest.mark.parametrize("n", [2, 3, 5, 11, 20])
    def test_grid_hull_perimeter_bound(self, n):
        hull = strict_hull(make_grid(GridSpec(n)))
        assert polygon_perimeter(hull) <= 4 * (n - 1) + 1e-9

    @given(point_sets)
    @settings(max_examples=150, deadline=None)
    def test_shoelace_matches_fan_triangulation(self, points):
        hull = strict_hull(points)
        vs = hull.vertices
        fan = sum(cross(vs[0], vs[i], vs[i + 1]) for i in range(1, len(vs) - 1))
        expected = fan if hull.is_proper else 0
        assert polygon_doubled_area(hull) == expected

    def test_perimeter_matches_hypot_sum(self):
        triangle = ConvexPolygon.from_vertices([(0, 0), (4, 0), (0, 3)])
        assert polygon_perimeter(triangle) == pytest.approx(4 + 5 + 3)
        assert math.isfinite(polygon_perimeter(triangle))


class TestSymmetry:
    def test_grid_is_symmetric(self):
        assert is_centrally_symmetric(make_grid(GridSpec(4)))

    def test_asymmetric_set(self):
        assert not is_centrally_symmetric([Point(0, 0), Point(2, 0), Point(0, 1)])

    def test_empty_set_is_symmetric(self):
        assert is_centrally_symmetric([])
