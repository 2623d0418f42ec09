"""Peeling process: remove strict hull vertices until no points remain."""

from __future__ import annotations

import logging
from collections.abc import Iterator, Mapping
from dataclasses import dataclass, field
from enum import Enum
from typing import Any

from .geom_core import (
    ConvexPolygon,
    Point,
    PointSet,
    monotone_chain,
    polygon_doubled_area,
    polygon_from_hull,
    polygon_perimeter,
    strict_hull,
)

logger = logging.getLogger(__name__)


class TraceMode(str, Enum):
    FULL = "full"
    COUNT_ONLY = "count_only"


@dataclass(frozen=True)
class TraceSource:
    """Generator name and parameters of the peeled input."""

    generator: str = "points"
    params: Mapping[str, Any] = field(default_factory=dict)

    def label(self) -> str:
        args = ",".join(f"{k}={v}" for k, v in sorted(self.params.items()))
        return f"{self.generator}({args})"


@dataclass(frozen=True)
class LayerRecord:
    """One peeled layer; ``polygon`` is None in count-only traces."""

    index: int
    vertex_count: int
    doubled_area: int
    perimeter: float
    polygon: ConvexPolygon | None = None

    def __post_init__(self) -> None:
        if self.vertex_count < 1:
            raise ValueError(f"Layer {self.index} has no vertices")
        if self.polygon is not None and len(self.polygon) != self.vertex_count:
            raise ValueError(
                f"Layer {self.index}: vertex_count {self.vertex_count} does not "
                f"match polygon with {len(self.polygon)} vertices"
            )

    @property
    def is_proper(self) -> bool:
        return self.vertex_count >= 3


@dataclass(frozen=True)
class PeelingTrace:
    source: TraceSource
    layers: tuple[LayerRecord, ...]

    @property
    def tau(self) -> int:
        return len(self.layers)

    @property
    def total_points(self) -> int:
        return sum(layer.vertex_count for layer in self.layers)

    @property
    def has_polygons(self) -> bool:
        return all(layer.polygon is not None for layer in self.layers)

    def polygons(self) -> list[ConvexPolygon]:
        """Layer polygons in order; requires a full trace."""
        if not self.has_polygons:
            raise ValueError("Trace was recorded in count-only mode")
        return [layer.polygon for layer in self.layers]  # type: ignore[misc]


class _Column:
    """Remaining y values of one grid column, kept as a sorted slice [lo, hi]."""

    __slots__ = ("x", "ys", "lo", "hi")

    def __init__(self, x: int, ys: list[int]) -> None:
        self.x = x
        self.ys = ys
        self.lo = 0
        self.hi = len(ys) - 1


def _columns(points: PointSet) -> list[_Column]:
    columns: list[_Column] = []
    current_x: int | None = None
    ys: list[int] = []
    for x, y in points:
        if x != current_x:
            if ys:
                columns.append(_Column(current_x, ys))  # type: ignore[arg-type]
            current_x, ys = x, []
        ys.append(y)
    if ys:
        columns.append(_Column(current_x, ys))  # type: ignore[arg-type]
    return columns


def iter_layers(points: PointSet) -> Iterator[tuple[Point, ...]]:
    """Yield the canonical vertex cycle of every layer, outermost first.

    Only the lowest and highest remaining point of a column can be a corner,
    so each iteration runs the monotone chain over column extremes and removes
    vertices by moving the column bounds. Emptied columns are compacted away.
    """
    columns = _columns(points)
    by_x = {col.x: col for col in columns}
    while columns:
        candidates: list[Point] = []
        for col in columns:
            candidates.append(Point(col.x, col.ys[col.lo]))
            if col.hi > col.lo:
                candidates.append(Point(col.x, col.ys[col.hi]))
        hull = monotone_chain(candidates)
        for x, y in hull:
            col = by_x[x]
            if y == col.ys[col.lo]:
                col.lo += 1
            else:
                col.hi -= 1
        yield hull
        if any(col.lo > col.hi for col in columns):
            columns = [col for col in columns if col.lo <= col.hi]


def _record(index: int, hull: tuple[Point, ...], mode: TraceMode) -> LayerRecord:
    polygon = polygon_from_hull(hull)
    return LayerRecord(
        index=index,
        vertex_count=len(hull),
        doubled_area=polygon_doubled_area(polygon),
        perimeter=polygon_perimeter(polygon),
        polygon=polygon if mode is TraceMode.FULL else None,
    )


def peel(
    points: PointSet,
    source: TraceSource | None = None,
    mode: TraceMode = TraceMode.FULL,
) -> PeelingTrace:
    """Peel ``points`` to exhaustion; layer indices start at 1."""
    layers = tuple(
        _record(i, hull, mode) for i, hull in enumerate(iter_layers(points), start=1)
    )
    logger.debug(f"Peeled {len(points)} points into {len(layers)} layers")
    return PeelingTrace(source or TraceSource(), layers)


def peel_naive(points: PointSet, source: TraceSource | None = None) -> PeelingTrace:
    """Reference peeling: rebuild and re-sort the set, recompute the hull each pass."""
    remaining = set(points)
    layers: list[LayerRecord] = []
    while remaining:
        polygon = strict_hull(PointSet(remaining))
        layers.append(_record(len(layers) + 1, polygon.vertices, TraceMode.FULL))
        remaining.difference_update(polygon.vertices)
    return PeelingTrace(source or TraceSource(), tuple(layers))


def tau_of(points: PointSet) -> int:
    """Number of layers, without keeping them."""
    return sum(1 for _ in iter_layers(points))


def convex_depth(points: PointSet) -> dict[Point, int]:
    """Layer index at which each point is removed (1 for the outer hull)."""
    depth: dict[Point, int] = {}
    for i, hull in enumerate(iter_layers(points), start=1):
        for p in hull:
            depth[p] = i
    return depth
