"""Gold layer - Power-law exponents of the layer count and layer size."""

from __future__ import annotations

import logging
from datetime import datetime, timezone
from typing import Tuple

import polars as pl

try:
    from .analysis import ScalingSample, fit_power_law
    from .storage import read_parquet_latest, write_parquet
    from .utils import frame_metadata, log_frame_info, time_operation, validate_frame
except ImportError:
    import os
    import sys

    sys.path.insert(0, os.path.join(os.path.dirname(__file__), ".."))
    from core.analysis import ScalingSample, fit_power_law
    from core.storage import read_parquet_latest, write_parquet
    from core.utils import frame_metadata, log_frame_info, time_operation, validate_frame

logging.basicConfig(
    level=logging.INFO, format="%(asctime)s - %(name)s - %(levelname)s - %(message)s"
)
logger = logging.getLogger(__name__)

# (family, summary column, exponent the theory predicts)
FITS = [
    ("grid", "tau", 4 / 3),
    ("grid", "max_vertex_count", 2 / 3),
    ("squares", "tau", 2.0),
]


def fit_summaries(summaries: pl.DataFrame) -> pl.DataFrame:
    """One fitted exponent per (family, quantity) with at least two sizes."""
    validate_frame(summaries, ["family", "size", "tau", "max_vertex_count"])
    rows = []
    for family, column, expected in FITS:
        subset = summaries.filter(pl.col("family") == family).sort("size")
        samples = [
            ScalingSample(int(n), float(v))
            for n, v in subset.select("size", column).iter_rows()
            if n >= 2
        ]
        if len({s.n for s in samples}) < 2:
            logger.warning(f"Skipping {family}/{column}: fewer than two sizes")
            continue
        fit = fit_power_law(samples)
        logger.info(
            f"{family}/{column}: slope={fit.slope:.4f} (expected {expected:.4f}), "
            f"r2={fit.r_squared:.5f}"
        )
        rows.append(
            {
                "family": family,
                "quantity": column,
                "slope": fit.slope,
                "intercept": fit.intercept,
                "r_squared": fit.r_squared,
                "sample_count": len(samples),
                "min_size": samples[0].n,
                "max_size": samples[-1].n,
                "expected_exponent": expected,
            }
        )
    return pl.DataFrame(rows)


def aggregate() -> Tuple[str, pl.DataFrame, dict]:
    """Fit scaling exponents over the latest trace summaries."""
    with time_operation("gold scaling fits"):
        logger.info("Starting gold scaling fits")

        summaries = read_parquet_latest("silver", "silver_trace_summaries_")
        log_frame_info(summaries, "Silver trace summaries input")

        result = fit_summaries(summaries)
        validate_frame(result, ["quantity", "slope", "r_squared"])

        aggregate_time = datetime.now(timezone.utc).replace(microsecond=0).isoformat()
        result = result.with_columns(pl.lit(aggregate_time).alias("aggregated_at"))
        log_frame_info(result, "Gold scaling fits output")

        timestamp = datetime.now(timezone.utc).strftime("%Y%m%dT%H%M%SZ")
        output_path = write_parquet(
            result, "gold", f"gold_scaling_fits_{timestamp}.parquet"
        )

        metadata = frame_metadata(result)
        logger.info(f"Gold scaling fits completed: {output_path}")
        return output_path, result, metadata


if __name__ == "__main__":
    result = aggregate()
    print(f"Aggregation completed: {result[0]}")
