"""Exact integer planar primitives and the strict convex hull.

Every decision is made on Python integers, so cross products never round.
A hull vertex is a corner only: points lying in the middle of a hull edge are
not vertices.
"""

from __future__ import annotations

import math
from bisect import bisect_left
from collections.abc import Iterable, Iterator, Sequence
from dataclasses import dataclass
from enum import Enum
from typing import NamedTuple

from .errors import CapacityError


# |x|, |y| bound; keeps every cross product inside a signed 128-bit range.
POINT_CAPACITY = 2 * 3**38


class Point(NamedTuple):
    """Integer lattice point; tuple ordering is lexicographic (x, then y)."""

    x: int
    y: int


class Orientation(Enum):
    LEFT = 1
    RIGHT = -1
    COLLINEAR = 0


class DegeneracyKind(str, Enum):
    EMPTY = "empty"
    SINGLE_POINT = "single_point"
    SEGMENT = "segment"
    PROPER = "proper"


def cross(a: Point, b: Point, c: Point) -> int:
    """Twice the signed area of triangle abc, (b - a) x (c - a)."""
    return (b[0] - a[0]) * (c[1] - a[1]) - (b[1] - a[1]) * (c[0] - a[0])


def orientation(a: Point, b: Point, c: Point) -> Orientation:
    value = cross(a, b, c)
    if value > 0:
        return Orientation.LEFT
    if value < 0:
        return Orientation.RIGHT
    return Orientation.COLLINEAR


def check_capacity(points: Iterable[Point]) -> None:
    """Raise CapacityError if any coordinate is outside the supported range."""
    for p in points:
        if abs(p[0]) > POINT_CAPACITY or abs(p[1]) > POINT_CAPACITY:
            raise CapacityError(
                f"Point {tuple(p)} exceeds coordinate capacity {POINT_CAPACITY}"
            )


class PointSet:
    """Immutable, lexicographically sorted, duplicate-free set of points."""

    __slots__ = ("_points",)

    def __init__(self, points: Iterable[Point | tuple[int, int]] = ()) -> None:
        unique = sorted({Point(int(x), int(y)) for x, y in points})
        check_capacity(unique)
        self._points: tuple[Point, ...] = tuple(unique)

    @classmethod
    def _from_sorted(cls, points: tuple[Point, ...]) -> PointSet:
        # Caller guarantees sortedness, uniqueness and capacity.
        instance = cls.__new__(cls)
        instance._points = points
        return instance

    @property
    def points(self) -> tuple[Point, ...]:
        return self._points

    def without(self, removed: Iterable[Point]) -> PointSet:
        """Return a new set with ``removed`` taken out."""
        drop = set(removed)
        return PointSet._from_sorted(tuple(p for p in self._points if p not in drop))

    def __len__(self) -> int:
        return len(self._points)

    def __iter__(self) -> Iterator[Point]:
        return iter(self._points)

    def __contains__(self, item: object) -> bool:
        if not isinstance(item, tuple):
            return False
        i = bisect_left(self._points, item)
        return i < len(self._points) and self._points[i] == item

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, PointSet):
            return NotImplemented
        return self._points == other._points

    def __hash__(self) -> int:
        return hash(self._points)

    def __repr__(self) -> str:
        return f"PointSet({len(self._points)} points)"


@dataclass(frozen=True)
class ConvexPolygon:
    """Strictly convex vertex cycle, CCW from the lexicographically smallest vertex."""

    vertices: tuple[Point, ...]
    kind: DegeneracyKind

    @classmethod
    def from_vertices(cls, vertices: Sequence[Point | tuple[int, int]]) -> ConvexPolygon:
        """Build a polygon from a CCW vertex cycle, rotating to the canonical start.

        Raises:
            ValueError: If the cycle repeats a vertex or is not strictly convex CCW.
        """
        pts = [Point(int(x), int(y)) for x, y in vertices]
        if len(set(pts)) != len(pts):
            raise ValueError("Polygon vertices must be distinct")
        check_capacity(pts)
        if not pts:
            return cls((), DegeneracyKind.EMPTY)
        start = pts.index(min(pts))
        pts = pts[start:] + pts[:start]
        if len(pts) == 1:
            return cls(tuple(pts), DegeneracyKind.SINGLE_POINT)
        if len(pts) == 2:
            return cls(tuple(pts), DegeneracyKind.SEGMENT)
        count = len(pts)
        for i in range(count):
            if cross(pts[i], pts[(i + 1) % count], pts[(i + 2) % count]) <= 0:
                raise ValueError(
                    f"Vertices are not a strictly convex CCW cycle at {pts[i]}"
                )
        return cls(tuple(pts), DegeneracyKind.PROPER)

    @property
    def is_proper(self) -> bool:
        return self.kind is DegeneracyKind.PROPER

    def edges(self) -> Iterator[tuple[Point, Point]]:
        """Directed boundary edges; none for degenerate kinds."""
        if not self.is_proper:
            return iter(())
        count = len(self.vertices)
        return (
            (self.vertices[i], self.vertices[(i + 1) % count]) for i in range(count)
        )

    def contains(self, p: Point) -> bool:
        """True if ``p`` lies inside or on the polygon."""
        if self.kind is DegeneracyKind.EMPTY:
            return False
        if self.kind is DegeneracyKind.SINGLE_POINT:
            return p == self.vertices[0]
        if self.kind is DegeneracyKind.SEGMENT:
            a, b = self.vertices
            return cross(a, b, p) == 0 and min(a, b) <= p <= max(a, b)
        return all(cross(a, b, p) >= 0 for a, b in self.edges())

    def __len__(self) -> int:
        return len(self.vertices)


def _half_chain(points: Iterable[Point]) -> list[Point]:
    chain: list[Point] = []
    for p in points:
        while len(chain) >= 2 and cross(chain[-2], chain[-1], p) <= 0:
            chain.pop()
        chain.append(p)
    return chain


def monotone_chain(sorted_points: Sequence[Point]) -> tuple[Point, ...]:
    """Andrew's monotone chain over lexicographically sorted, distinct points.

    Collinear points are popped, so only corners survive. The result starts at
    the smallest point and runs counterclockwise.
    """
    if len(sorted_points) <= 2:
        return tuple(sorted_points)
    lower = _half_chain(sorted_points)
    upper = _half_chain(reversed(sorted_points))
    return tuple(lower[:-1] + upper[:-1])


def _kind_for(count: int) -> DegeneracyKind:
    if count == 0:
        return DegeneracyKind.EMPTY
    if count == 1:
        return DegeneracyKind.SINGLE_POINT
    if count == 2:
        return DegeneracyKind.SEGMENT
    return DegeneracyKind.PROPER


def polygon_from_hull(vertices: tuple[Point, ...]) -> ConvexPolygon:
    """Wrap monotone chain output, which is already canonical."""
    return ConvexPolygon(vertices, _kind_for(len(vertices)))


def strict_hull(points: PointSet) -> ConvexPolygon:
    """Convex hull whose vertex set is exactly the corners of CH(points)."""
    return polygon_from_hull(monotone_chain(points.points))


def polygon_doubled_area(poly: ConvexPolygon) -> int:
    """Twice the enclosed area by the shoelace sum; 0 for degenerate kinds."""
    if not poly.is_proper:
        return 0
    vs = poly.vertices
    count = len(vs)
    total = 0
    for i in range(count):
        x0, y0 = vs[i]
        x1, y1 = vs[(i + 1) % count]
        total += x0 * y1 - x1 * y0
    return total


def polygon_perimeter(poly: ConvexPolygon) -> float:
    """Euclidean boundary length. A segment counts both sides."""
    if poly.kind in (DegeneracyKind.EMPTY, DegeneracyKind.SINGLE_POINT):
        return 0.0
    if poly.kind is DegeneracyKind.SEGMENT:
        (x0, y0), (x1, y1) = poly.vertices
        return 2.0 * math.hypot(x1 - x0, y1 - y0)
    return sum(math.hypot(b.x - a.x, b.y - a.y) for a, b in poly.edges())


def is_centrally_symmetric(points: Iterable[Point]) -> bool:
    """True if the set equals its reflection through its bounding-box center."""
    pts = set(points)
    if not pts:
        return True
    xs = [p[0] for p in pts]
    ys = [p[1] for p in pts]
    cx2 = min(xs) + max(xs)
    cy2 = min(ys) + max(ys)
    return all((cx2 - x, cy2 - y) in pts for x, y in pts)
