"""Bronze layer - Per-layer records of peeled integer grids."""

from __future__ import annotations

import logging
from datetime import datetime, timezone
from typing import Sequence, Tuple

import polars as pl

try:
    from . import settings
    from .constructions import GridSpec, make_grid
    from .peeling import TraceMode, TraceSource, peel
    from .storage import trace_to_frame, write_parquet
    from .utils import frame_metadata, log_frame_info, time_operation, validate_frame
except ImportError:
    import os
    import sys

    sys.path.insert(0, os.path.join(os.path.dirname(__file__), ".."))
    from core import settings
    from core.constructions import GridSpec, make_grid
    from core.peeling import TraceMode, TraceSource, peel
    from core.storage import trace_to_frame, write_parquet
    from core.utils import frame_metadata, log_frame_info, time_operation, validate_frame

logging.basicConfig(
    level=logging.INFO, format="%(asctime)s - %(name)s - %(levelname)s - %(message)s"
)
logger = logging.getLogger(__name__)

LAYER_COLUMNS = ["family", "size", "layer_index", "vertex_count", "perimeter"]


def extract(sizes: Sequence[int] | None = None) -> Tuple[str, pl.DataFrame, dict]:
    """Peel Grid(n) for every sweep size and write one row per layer."""
    sizes = sorted(set(sizes or settings.GRID_SWEEP_SIZES))
    with time_operation(f"bronze grid layers {sizes}"):
        logger.info("Starting bronze grid layers extraction")

        frames = []
        for n in sizes:
            spec = GridSpec(n)
            trace = peel(
                make_grid(spec),
                TraceSource(spec.generator, spec.params()),
                TraceMode.COUNT_ONLY,
            )
            logger.info(f"Grid({n}): tau={trace.tau}")
            frames.append(trace_to_frame(trace, family="grid", size=n))

        df = pl.concat(frames, how="vertical")
        fetch_time = datetime.now(timezone.utc).replace(microsecond=0).isoformat()
        df = df.with_columns(pl.lit(fetch_time).alias("peeled_at"))

        log_frame_info(df, "Bronze grid layers output")
        validate_frame(df, LAYER_COLUMNS)

        timestamp = datetime.now(timezone.utc).strftime("%Y%m%dT%H%M%SZ")
        output_path = write_parquet(df, "bronze", f"bronze_grid_layers_{timestamp}.parquet")

        metadata = frame_metadata(df, sizes=sizes)
        logger.info(f"Bronze grid layers extraction completed: {output_path}")
        return output_path, df, metadata


if __name__ == "__main__":
    result = extract()
    print(f"Extraction completed: {result[0]}")
