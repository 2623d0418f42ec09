"""Gold layer - Checks of the upper-bound counting argument on small grids."""

from __future__ import annotations

import logging
from datetime import datetime, timezone
from typing import Tuple

import polars as pl

try:
    from . import settings
    from .constructions import GridSpec, make_grid
    from .peeling import TraceSource, peel
    from .proof_lab import (
        activity_trace,
        count_grid_lines,
        decrement_violations,
    )
    from .storage import read_parquet_latest, write_parquet
    from .utils import frame_metadata, log_frame_info, time_operation, validate_frame
except ImportError:
    import os
    import sys

    sys.path.insert(0, os.path.join(os.path.dirname(__file__), ".."))
    from core import settings
    from core.constructions import GridSpec, make_grid
    from core.peeling import TraceSource, peel
    from core.proof_lab import (
        activity_trace,
        count_grid_lines,
        decrement_violations,
    )
    from core.storage import read_parquet_latest, write_parquet
    from core.utils import frame_metadata, log_frame_info, time_operation, validate_frame

logging.basicConfig(
    level=logging.INFO, format="%(asctime)s - %(name)s - %(levelname)s - %(message)s"
)
logger = logging.getLogger(__name__)


def default_mu(n: int) -> int:
    """mu = floor(n^{1/3}), the balancing choice of the counting argument."""
    mu = max(1, round(n ** (1 / 3)))
    while mu**3 > n:
        mu -= 1
    while (mu + 1) ** 3 <= n:
        mu += 1
    return max(1, mu)


def check_grid(n: int, mu: int | None = None) -> dict:
    """Activity, decrement and line-bound figures for Grid(n)."""
    mu = mu or default_mu(n)
    spec = GridSpec(n)
    trace = peel(make_grid(spec), TraceSource(spec.generator, spec.params()))
    activity = activity_trace(trace, mu, keep_flags=False)
    violations = decrement_violations(trace, mu)
    max_lines = max(count_grid_lines(v, n) for v in activity.directions)
    edge_bound_ok = all(
        layer.vertex_count >= 2 * record.active_count
        for layer, record in zip(trace.layers, activity.per_iteration, strict=True)
        if layer.is_proper
    )
    return {
        "n": n,
        "mu": mu,
        "tau": trace.tau,
        "directions": len(activity.directions),
        "alpha": activity.alpha,
        "m_budget": activity.m_budget,
        "max_active": max(activity.active_counts(), default=0),
        "max_inactive": max(activity.inactive_counts, default=0),
        "inactive_budget": activity.inactive_budget,
        "decrement_violations": len(violations),
        "max_lines": max_lines,
        "line_bound": 4 * n * mu,
        "edge_bound_ok": edge_bound_ok,
    }


def aggregate() -> Tuple[str, pl.DataFrame, dict]:
    """Run the proof checks for the summarized grids up to ACTIVITY_MAX_N."""
    with time_operation("gold proof checks"):
        logger.info("Starting gold proof checks")

        summaries = read_parquet_latest("silver", "silver_trace_summaries_")
        validate_frame(summaries, ["family", "size", "tau"])
        grids = summaries.filter(
            (pl.col("family") == "grid")
            & (pl.col("size") >= 2)
            & (pl.col("size") <= settings.ACTIVITY_MAX_N)
        ).sort("size")
        if grids.is_empty():
            raise ValueError(
                f"No summarized grid with 2 <= n <= {settings.ACTIVITY_MAX_N}"
            )

        rows = []
        for n, tau in grids.select("size", "tau").iter_rows():
            row = check_grid(int(n))
            if row["tau"] != tau:
                raise ValueError(f"Grid({n}): tau {row['tau']} disagrees with summary {tau}")
            if row["decrement_violations"]:
                logger.warning(f"Grid({n}): {row['decrement_violations']} decrement violations")
            rows.append(row)

        result = pl.DataFrame(rows)
        validate_frame(result, ["n", "mu", "alpha", "decrement_violations"])

        aggregate_time = datetime.now(timezone.utc).replace(microsecond=0).isoformat()
        result = result.with_columns(pl.lit(aggregate_time).alias("aggregated_at"))
        log_frame_info(result, "Gold proof checks output")

        timestamp = datetime.now(timezone.utc).strftime("%Y%m%dT%H%M%SZ")
        output_path = write_parquet(
            result, "gold", f"gold_proof_checks_{timestamp}.parquet"
        )

        metadata = frame_metadata(result, max_n=settings.ACTIVITY_MAX_N)
        logger.info(f"Gold proof checks completed: {output_path}")
        return output_path, result, metadata


if __name__ == "__main__":
    result = aggregate()
    print(f"Aggregation completed: {result[0]}")
