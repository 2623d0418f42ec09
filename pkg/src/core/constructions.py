"""Point families: the integer grid and the nested-squares construction."""

from __future__ import annotations

import logging
from dataclasses import dataclass
from typing import Any

from .errors import CapacityError
from .geom_core import Point, PointSet

logger = logging.getLogger(__name__)

# 3**38 keeps nested-squares coordinates inside the Point capacity.
MAX_SQUARES = 38


@dataclass(frozen=True)
class GridSpec:
    """Grid(n) = {1, ..., n}^2."""

    n: int

    def __post_init__(self) -> None:
        if self.n < 1:
            raise ValueError(f"Grid side must be >= 1, got: {self.n}")

    @property
    def generator(self) -> str:
        return "grid"

    def params(self) -> dict[str, Any]:
        return {"n": self.n}


@dataclass(frozen=True)
class SquaresSpec:
    """k concentric squares with sides 3^i, stored with doubled coordinates.

    Doubling puts every corner on the integer lattice: square i spans
    [-3^i, 3^i]^2.
    """

    k: int

    def __post_init__(self) -> None:
        if self.k < 1:
            raise ValueError(f"Number of squares must be >= 1, got: {self.k}")
        if self.k > MAX_SQUARES:
            raise CapacityError(
                f"Nested squares support k <= {MAX_SQUARES}, got: {self.k}"
            )

    @property
    def generator(self) -> str:
        return "squares"

    def params(self) -> dict[str, Any]:
        return {"k": self.k}

    @property
    def side_count(self) -> int:
        """n = 2k, the number of points on every line of the construction."""
        return 2 * self.k


SourceSpec = GridSpec | SquaresSpec


def make_grid(spec: GridSpec) -> PointSet:
    side = range(1, spec.n + 1)
    logger.debug(f"Building Grid({spec.n}) with {spec.n * spec.n} points")
    return PointSet(Point(x, y) for x in side for y in side)


def nested_square_offsets(spec: SquaresSpec) -> list[int]:
    """Sorted signed offsets +-3^i, i = 1..k (doubled half-sides)."""
    halves = [3**i for i in range(1, spec.k + 1)]
    return sorted([-h for h in halves] + halves)


def nested_square_lines(spec: SquaresSpec) -> list[tuple[str, int]]:
    """The 4k lines extending the square sides, as ("x" | "y", offset)."""
    offsets = nested_square_offsets(spec)
    return [("x", c) for c in offsets] + [("y", c) for c in offsets]


def make_nested_squares(spec: SquaresSpec) -> PointSet:
    """All 4k^2 pairwise intersections of the construction's lines."""
    offsets = nested_square_offsets(spec)
    logger.debug(f"Building nested squares k={spec.k} with {len(offsets) ** 2} points")
    return PointSet(Point(x, y) for x in offsets for y in offsets)


def square_index(p: Point) -> int:
    """Doubled half-side 3^j of the square whose boundary carries ``p``: max(|x|, |y|)."""
    return max(abs(p.x), abs(p.y))


def nested_squares_tau(k: int) -> int:
    """Layer count of the construction, k(k+1)/2.

    Square j contributes its 4 corners as one layer and then j - 1 octagons of
    8 points, peeled before anything of square j - 1 is touched.
    """
    return k * (k + 1) // 2


def make_points(spec: SourceSpec) -> PointSet:
    if isinstance(spec, GridSpec):
        return make_grid(spec)
    return make_nested_squares(spec)
