"""Silver layer - Per-trace summaries of the peeled layer tables."""

from __future__ import annotations

import logging
from datetime import datetime, timezone
from typing import Tuple

import polars as pl

try:
    from .storage import read_parquet_latest, write_parquet
    from .utils import frame_metadata, log_frame_info, time_operation, validate_frame
except ImportError:
    import os
    import sys

    sys.path.insert(0, os.path.join(os.path.dirname(__file__), ".."))
    from core.storage import read_parquet_latest, write_parquet
    from core.utils import frame_metadata, log_frame_info, time_operation, validate_frame

logging.basicConfig(
    level=logging.INFO, format="%(asctime)s - %(name)s - %(levelname)s - %(message)s"
)
logger = logging.getLogger(__name__)

COMMON_COLUMNS = ["family", "size", "layer_index", "vertex_count", "isoperimetric_ratio"]


def summarize(layers: pl.DataFrame) -> pl.DataFrame:
    """Collapse a layer table to one row per (family, size)."""
    validate_frame(layers, COMMON_COLUMNS)
    mid_index = (pl.col("layer_index").max() // 2).clip(lower_bound=1)
    return (
        layers.lazy()
        .group_by("family", "size")
        .agg(
            tau=pl.col("layer_index").max(),
            max_vertex_count=pl.col("vertex_count").max(),
            argmax_layer=pl.col("layer_index")
            .filter(pl.col("vertex_count") == pl.col("vertex_count").max())
            .min(),
            total_points=pl.col("vertex_count").sum(),
            first_ratio=pl.col("isoperimetric_ratio")
            .filter(pl.col("layer_index") == 1)
            .first(),
            mid_ratio=pl.col("isoperimetric_ratio")
            .filter(pl.col("layer_index") == mid_index)
            .first(),
        )
        .with_columns(
            tau_lower_bound=(
                (pl.col("total_points") + pl.col("max_vertex_count") - 1)
                // pl.col("max_vertex_count")
            )
        )
        .sort("family", "size")
        .collect()
    )


def transform() -> Tuple[str, pl.DataFrame, dict]:
    """Summarize the latest grid and nested-squares layer tables."""
    with time_operation("silver trace summaries"):
        logger.info("Starting silver trace summaries")

        grid_layers = read_parquet_latest("bronze", "bronze_grid_layers_")
        squares_layers = read_parquet_latest("bronze", "bronze_squares_layers_")
        log_frame_info(grid_layers, "Bronze grid layers input")
        log_frame_info(squares_layers, "Bronze squares layers input")

        layers = pl.concat(
            [grid_layers.select(COMMON_COLUMNS), squares_layers.select(COMMON_COLUMNS)],
            how="vertical",
        )
        summaries = summarize(layers)

        # Both families hold size^2 points; the layers must partition them.
        bad = summaries.filter(
            pl.col("total_points") != pl.col("size") * pl.col("size")
        )
        if not bad.is_empty():
            raise ValueError(f"Layer counts do not partition the input: {bad.rows()}")

        transform_time = datetime.now(timezone.utc).replace(microsecond=0).isoformat()
        summaries = summaries.with_columns(pl.lit(transform_time).alias("transformed_at"))
        log_frame_info(summaries, "Silver trace summaries")

        timestamp = datetime.now(timezone.utc).strftime("%Y%m%dT%H%M%SZ")
        output_path = write_parquet(
            summaries, "silver", f"silver_trace_summaries_{timestamp}.parquet"
        )

        metadata = frame_metadata(summaries)
        logger.info(f"Silver trace summaries completed: {output_path}")
        return output_path, summaries, metadata


if __name__ == "__main__":
    result = transform()
    print(f"Transformation completed: {result[0]}")
