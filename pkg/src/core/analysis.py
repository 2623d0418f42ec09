"""Scaling-law fits and shape diagnostics over peeling traces."""

from __future__ import annotations

import logging
import math
from collections.abc import Iterable, Sequence
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from enum import Enum

import numpy as np

from .constructions import GridSpec, make_grid
from .errors import DegenerateInputError
from .geom_core import ConvexPolygon, polygon_doubled_area, polygon_perimeter
from .peeling import PeelingTrace, TraceMode, peel

logger = logging.getLogger(__name__)


class Quantity(str, Enum):
    TAU = "tau"
    MAX_LAYER = "maxlayer"

    @property
    def expected_exponent(self) -> float:
        return 4 / 3 if self is Quantity.TAU else 2 / 3


@dataclass(frozen=True)
class ScalingSample:
    n: int
    value: float

    def __post_init__(self) -> None:
        if self.n < 2:
            raise ValueError(f"Scaling sample needs n >= 2, got: {self.n}")
        if self.value < 1:
            raise ValueError(f"Scaling sample needs value >= 1, got: {self.value}")


@dataclass(frozen=True)
class ScalingFit:
    slope: float
    intercept: float
    r_squared: float
    samples: tuple[ScalingSample, ...]

    def predict(self, n: float) -> float:
        return math.exp(self.intercept) * n**self.slope


def fit_power_law(samples: Iterable[ScalingSample]) -> ScalingFit:
    """Least squares on (ln n, ln value); the slope estimates the exponent.

    Raises:
        DegenerateInputError: Fewer than two samples or a repeated n.
    """
    ordered = tuple(sorted(samples, key=lambda s: s.n))
    ns = [s.n for s in ordered]
    if len(set(ns)) < 2:
        raise DegenerateInputError("Power-law fit needs at least two distinct n")
    if len(set(ns)) != len(ns):
        raise DegenerateInputError(f"Power-law fit needs distinct n, got: {ns}")

    log_n = np.log(np.asarray(ns, dtype=float))
    log_v = np.log(np.asarray([s.value for s in ordered], dtype=float))
    slope, intercept = np.polyfit(log_n, log_v, 1)

    residuals = log_v - (slope * log_n + intercept)
    ss_res = float(np.sum(residuals**2))
    ss_tot = float(np.sum((log_v - log_v.mean()) ** 2))
    r_squared = 1.0 if ss_tot == 0.0 else max(0.0, 1.0 - ss_res / ss_tot)
    return ScalingFit(float(slope), float(intercept), r_squared, ordered)


def ratio_from_measures(doubled_area: int, perimeter: float) -> float:
    """4*pi*A / P^2 with A = doubled_area / 2."""
    return 2.0 * math.pi * doubled_area / (perimeter * perimeter)


def isoperimetric_ratio(poly: ConvexPolygon) -> float:
    """Circularity 4*pi*A / P^2 of a proper polygon.

    Raises:
        DegenerateInputError: For empty, single-point or segment polygons.
    """
    if not poly.is_proper:
        raise DegenerateInputError(
            f"Isoperimetric ratio needs a proper polygon, got: {poly.kind.value}"
        )
    return ratio_from_measures(polygon_doubled_area(poly), polygon_perimeter(poly))


@dataclass(frozen=True)
class TraceSummary:
    tau: int
    max_vertex_count: int
    argmax_index: int | None
    total_points: int
    isoperimetric_ratios: tuple[tuple[int, float], ...]

    def ratio_at(self, index: int) -> float | None:
        return dict(self.isoperimetric_ratios).get(index)


def trace_summary(trace: PeelingTrace) -> TraceSummary:
    """Layer count, largest layer and per-layer circularity of proper layers."""
    max_count = 0
    argmax: int | None = None
    for layer in trace.layers:
        if layer.vertex_count > max_count:
            max_count, argmax = layer.vertex_count, layer.index
    ratios = tuple(
        (layer.index, ratio_from_measures(layer.doubled_area, layer.perimeter))
        for layer in trace.layers
        if layer.is_proper
    )
    return TraceSummary(trace.tau, max_count, argmax, trace.total_points, ratios)


def tau_lower_bound(total_points: int, max_layer: int) -> int:
    """Every layer holds at most ``max_layer`` points, so tau >= points / max_layer."""
    if max_layer < 1:
        return 0
    return -(-total_points // max_layer)


def measure_grid(n: int, quantity: Quantity) -> ScalingSample:
    """Count-only peel of Grid(n), reduced to one scaling sample."""
    trace = peel(make_grid(GridSpec(n)), mode=TraceMode.COUNT_ONLY)
    if quantity is Quantity.TAU:
        value = trace.tau
    else:
        value = max(layer.vertex_count for layer in trace.layers)
    logger.info(f"Grid({n}): {quantity.value} = {value}")
    return ScalingSample(n, value)


def sweep(
    sizes: Sequence[int], quantity: Quantity, workers: int = 1
) -> list[ScalingSample]:
    """Measure ``quantity`` for each grid side; results are sorted by n."""
    unique = sorted(set(sizes))
    if workers > 1 and len(unique) > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            samples = list(pool.map(measure_grid, unique, [quantity] * len(unique)))
    else:
        samples = [measure_grid(n, quantity) for n in unique]
    return sorted(samples, key=lambda s: s.n)
