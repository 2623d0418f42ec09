"""Counting machinery of the O(n^{4/3}) upper bound, in executable form.

Primitive directions V(mu), the line families L_v through Grid(n), and the
active/inactive status of a direction against each peeled layer.
"""

from __future__ import annotations

import logging
import math
from collections.abc import Iterable, Iterator
from dataclasses import dataclass
from typing import NamedTuple

from .geom_core import ConvexPolygon, Point
from .peeling import PeelingTrace

logger = logging.getLogger(__name__)


class _DirectionFields(NamedTuple):
    vx: int
    vy: int


class Direction(_DirectionFields):
    """Primitive vector with 0 <= vy < vx and gcd(vx, vy) = 1.

    Line counting parametrizes lattice points with an extended gcd of 1, so
    non-primitive vectors are rejected here.
    """

    __slots__ = ()

    def __new__(cls, vx: int, vy: int) -> Direction:
        if not 0 <= vy < vx or math.gcd(vx, vy) != 1:
            raise ValueError(
                f"({vx}, {vy}) is not a primitive direction with 0 <= vy < vx"
            )
        return super().__new__(cls, vx, vy)

    def offset(self, p: Point) -> int:
        """Index c of the line with this direction through ``p``: vx*y - vy*x."""
        return self.vx * p[1] - self.vy * p[0]


def make_direction(vx: int, vy: int) -> Direction:
    return Direction(int(vx), int(vy))


@dataclass(frozen=True)
class PrimitiveVectorSet:
    mu: int
    vectors: tuple[Direction, ...]

    def __len__(self) -> int:
        return len(self.vectors)

    def __iter__(self) -> Iterator[Direction]:
        return iter(self.vectors)

    @property
    def density(self) -> float:
        """|V(mu)| / mu^2, tending to 3/pi^2."""
        return len(self.vectors) / (self.mu * self.mu)


def totient(x: int) -> int:
    """Euler's phi by trial factorization."""
    if x < 1:
        raise ValueError(f"totient is defined for x >= 1, got: {x}")
    result = x
    rest = x
    p = 2
    while p * p <= rest:
        if rest % p == 0:
            while rest % p == 0:
                rest //= p
            result -= result // p
        p += 1
    if rest > 1:
        result -= result // rest
    return result


def totient_sieve(limit: int) -> list[int]:
    """phi(0..limit) with a linear sieve; phi[0] is 0."""
    phi = list(range(limit + 1))
    primes: list[int] = []
    for i in range(2, limit + 1):
        if phi[i] == i:
            phi[i] = i - 1
            primes.append(i)
        for p in primes:
            if i * p > limit:
                break
            if i % p == 0:
                phi[i * p] = phi[i] * p
                break
            phi[i * p] = phi[i] * (p - 1)
    return phi


def totient_sum(mu: int) -> int:
    """Sum of phi(x) for x = 1..mu, i.e. |V(mu)|."""
    if mu < 1:
        raise ValueError(f"mu must be >= 1, got: {mu}")
    return sum(totient_sieve(mu)[1:])


def primitive_vectors(mu: int) -> PrimitiveVectorSet:
    """V(mu): primitive (x, y) with 0 <= y < x <= mu, sorted."""
    if mu < 1:
        raise ValueError(f"mu must be >= 1, got: {mu}")
    vectors: list[Direction] = []
    for x in range(1, mu + 1):
        row = [Direction(x, y) for y in range(x) if math.gcd(x, y) == 1]
        if len(row) != totient(x):
            raise RuntimeError(f"Found {len(row)} primitive vectors with x={x}, phi={totient(x)}")
        vectors.extend(row)
    return PrimitiveVectorSet(mu, tuple(vectors))


def _ceil_div(a: int, b: int) -> int:
    return -((-a) // b)


def _ext_gcd(a: int, b: int) -> tuple[int, int, int]:
    """(g, s, r) with a*s + b*r = g."""
    if b == 0:
        return a, 1, 0
    q, rem = divmod(a, b)
    g, s, r = _ext_gcd(b, rem)
    return g, r, s - q * r


def _grid_points_on_line(v: Direction, c: int, n: int) -> int:
    """Number of Grid(n) points on the line vx*y - vy*x = c.

    Lattice points on the line are (x0 + vx*t, y0 + vy*t); count the t that
    keep both coordinates in [1, n].
    """
    # vx*s + vy*r = 1, so (x, y) = (-c*r, c*s) is on the line.
    _, s, r = _ext_gcd(v.vx, v.vy)
    x0, y0 = -c * r, c * s
    t_lo = _ceil_div(1 - x0, v.vx)
    t_hi = (n - x0) // v.vx
    if v.vy == 0:
        if not 1 <= y0 <= n:
            return 0
    else:
        t_lo = max(t_lo, _ceil_div(1 - y0, v.vy))
        t_hi = min(t_hi, (n - y0) // v.vy)
    return max(0, t_hi - t_lo + 1)


def line_meets_grid(v: Direction, c: int, n: int) -> bool:
    """True if the line vx*y - vy*x = c contains a point of Grid(n)."""
    return _grid_points_on_line(v, c, n) > 0


def grid_offset_range(v: Direction, n: int) -> tuple[int, int]:
    """Smallest and largest line offset over Grid(n)."""
    return v.vx - v.vy * n, v.vx * n - v.vy


def count_grid_lines(v: Direction, n: int) -> int:
    """|L_v|: lines of direction v through at least one point of Grid(n).

    Offsets span the closed range from ``grid_offset_range``; near the corners
    some offsets miss the grid, so each is checked exactly.
    """
    if n < 2:
        raise ValueError(f"n must be >= 2, got: {n}")
    lo, hi = grid_offset_range(v, n)
    return sum(1 for c in range(lo, hi + 1) if line_meets_grid(v, c, n))


def typical_line_points(v: Direction, n: int) -> int:
    """Upper bound on grid points per line of L_v: 1 + floor((n - 1) / vx)."""
    return 1 + (n - 1) // v.vx


def max_line_points(v: Direction, n: int) -> int:
    """Largest number of Grid(n) points on a single line of L_v."""
    lo, hi = grid_offset_range(v, n)
    return max(_grid_points_on_line(v, c, n) for c in range(lo, hi + 1))


def _check_in_grid(vertices: Iterable[Point], n: int) -> None:
    for p in vertices:
        if not (1 <= p[0] <= n and 1 <= p[1] <= n):
            raise ValueError(f"Hull vertex {tuple(p)} lies outside Grid({n})")


def count_lines_meeting_hull(v: Direction, hull: ConvexPolygon, n: int) -> int:
    """|L_v ∩ C|: lines of L_v that intersect the hull."""
    _check_in_grid(hull.vertices, n)
    if not hull.vertices:
        return 0
    offsets = [v.offset(p) for p in hull.vertices]
    return sum(
        1 for c in range(min(offsets), max(offsets) + 1) if line_meets_grid(v, c, n)
    )


def is_active(v: Direction, hull: ConvexPolygon) -> bool:
    """Both supporting lines of direction v meet the hull along an edge.

    Degenerate hulls are inactive for every direction.
    """
    if not hull.is_proper:
        return False
    offsets = [v.offset(p) for p in hull.vertices]
    lo, hi = min(offsets), max(offsets)
    return offsets.count(lo) >= 2 and offsets.count(hi) >= 2


@dataclass(frozen=True)
class ActivityRecord:
    index: int
    active_count: int
    flags: tuple[bool, ...] | None = None


@dataclass(frozen=True)
class ActivityTrace:
    n_param: int
    mu: int
    directions: tuple[Direction, ...]
    per_iteration: tuple[ActivityRecord, ...]
    inactive_counts: tuple[int, ...]

    @property
    def alpha(self) -> int:
        return sum(record.active_count for record in self.per_iteration)

    @property
    def m_budget(self) -> int:
        """M = 4 n mu, the iteration budget of the upper-bound argument."""
        return 4 * self.n_param * self.mu

    @property
    def inactive_budget(self) -> int:
        """A direction can be inactive in at most 2 n mu iterations."""
        return 2 * self.n_param * self.mu

    def active_counts(self) -> list[int]:
        return [record.active_count for record in self.per_iteration]


def grid_side(trace: PeelingTrace) -> int:
    """Side n of the grid a trace was peeled from."""
    if trace.source.generator != "grid" or "n" not in trace.source.params:
        raise ValueError(
            f"Proof instrumentation needs a Grid(n) trace, got: {trace.source.label()}"
        )
    return int(trace.source.params["n"])


def activity_trace(
    trace: PeelingTrace, mu: int, keep_flags: bool = False
) -> ActivityTrace:
    """Evaluate every v in V(mu) against every layer of a Grid(n) trace."""
    n = grid_side(trace)
    directions = primitive_vectors(mu).vectors
    inactive = [0] * len(directions)
    records: list[ActivityRecord] = []
    for layer, polygon in zip(trace.layers, trace.polygons(), strict=True):
        flags = tuple(is_active(v, polygon) for v in directions)
        for j, flag in enumerate(flags):
            if not flag:
                inactive[j] += 1
        records.append(
            ActivityRecord(
                index=layer.index,
                active_count=sum(flags),
                flags=flags if keep_flags else None,
            )
        )
    logger.debug(
        f"Activity over {len(records)} layers of Grid({n}) with |V({mu})| = {len(directions)}"
    )
    return ActivityTrace(n, mu, directions, tuple(records), tuple(inactive))


@dataclass(frozen=True)
class DecrementViolation:
    direction: Direction
    index: int
    lines_before: int
    lines_after: int


def decrement_violations(trace: PeelingTrace, mu: int) -> list[DecrementViolation]:
    """Iterations where an inactive direction fails to lose two lines.

    A layer lying inside a single line of L_v is skipped: it has no tangent
    touching only at a vertex.
    """
    n = grid_side(trace)
    polygons = trace.polygons()
    violations: list[DecrementViolation] = []
    for v in primitive_vectors(mu):
        counts = [count_lines_meeting_hull(v, poly, n) for poly in polygons]
        for i in range(len(polygons) - 1):
            if is_active(v, polygons[i]) or counts[i] == 1:
                continue
            if counts[i + 1] > counts[i] - 2:
                violations.append(
                    DecrementViolation(v, trace.layers[i].index, counts[i], counts[i + 1])
                )
    return violations
