"""Bronze layer - Per-layer records of peeled nested-squares sets."""

from __future__ import annotations

import logging
from datetime import datetime, timezone
from typing import Tuple

import polars as pl

try:
    from . import settings
    from .constructions import SquaresSpec, make_nested_squares
    from .peeling import TraceMode, TraceSource, peel
    from .storage import trace_to_frame, write_parquet
    from .utils import frame_metadata, log_frame_info, time_operation, validate_frame
except ImportError:
    import os
    import sys

    sys.path.insert(0, os.path.join(os.path.dirname(__file__), ".."))
    from core import settings
    from core.constructions import SquaresSpec, make_nested_squares
    from core.peeling import TraceMode, TraceSource, peel
    from core.storage import trace_to_frame, write_parquet
    from core.utils import frame_metadata, log_frame_info, time_operation, validate_frame

logging.basicConfig(
    level=logging.INFO, format="%(asctime)s - %(name)s - %(levelname)s - %(message)s"
)
logger = logging.getLogger(__name__)


def extract(max_k: int | None = None) -> Tuple[str, pl.DataFrame, dict]:
    """Peel the nested-squares set for k = 1..max_k.

    ``size`` is n = 2k, the side count the construction is compared against.
    """
    max_k = max_k or settings.SQUARES_SWEEP_MAX_K
    with time_operation(f"bronze nested squares layers k<={max_k}"):
        logger.info("Starting bronze nested squares extraction")

        frames = []
        for k in range(1, max_k + 1):
            spec = SquaresSpec(k)
            trace = peel(
                make_nested_squares(spec),
                TraceSource(spec.generator, spec.params()),
                TraceMode.COUNT_ONLY,
            )
            frame = trace_to_frame(trace, family="squares", size=spec.side_count)
            # Areas grow like 9^k; keep the column type uniform across k.
            frames.append(frame.with_columns(pl.col("doubled_area").cast(pl.Utf8)))

        df = pl.concat(frames, how="vertical")
        fetch_time = datetime.now(timezone.utc).replace(microsecond=0).isoformat()
        df = df.with_columns(pl.lit(fetch_time).alias("peeled_at"))

        log_frame_info(df, "Bronze squares layers output")
        validate_frame(df, ["family", "size", "layer_index", "vertex_count"])

        timestamp = datetime.now(timezone.utc).strftime("%Y%m%dT%H%M%SZ")
        output_path = write_parquet(
            df, "bronze", f"bronze_squares_layers_{timestamp}.parquet"
        )

        metadata = frame_metadata(df, max_k=max_k)
        logger.info(f"Bronze squares layers extraction completed: {output_path}")
        return output_path, df, metadata


if __name__ == "__main__":
    result = extract()
    print(f"Extraction completed: {result[0]}")
