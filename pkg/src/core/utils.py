"""Helpers shared by the pipeline steps: timing, frame checks and metadata."""

from __future__ import annotations

import logging
import time
from collections.abc import Generator
from contextlib import contextmanager

import polars as pl

logger = logging.getLogger(__name__)


@contextmanager
def time_operation(operation_name: str) -> Generator[None, None, None]:
    """Log start, wall time and failure of the wrapped block.

    Example:
        with time_operation("peel Grid(128)"):
            trace = peel(points)
    """
    logger.info(f"Starting operation: {operation_name}")
    start = time.perf_counter()
    try:
        yield
    except Exception as e:
        logger.error(
            f"Operation '{operation_name}' failed after "
            f"{time.perf_counter() - start:.2f} seconds: {e}"
        )
        raise
    logger.info(
        f"Completed operation '{operation_name}' in {time.perf_counter() - start:.2f} seconds"
    )


def log_frame_info(df: pl.DataFrame, name: str = "DataFrame") -> None:
    """Log shape and estimated size of a Polars DataFrame."""
    logger.info(f"{name}: {df.height} rows, {df.width} columns")
    size_mb = df.estimated_size() / (1024 * 1024)
    logger.debug(f"{name} estimated memory usage: {size_mb:.2f} MB")


def validate_frame(df: pl.DataFrame | None, required_columns: list[str] | None = None) -> None:
    """Raise ValueError for a missing or empty frame, or absent columns."""
    if df is None:
        raise ValueError("DataFrame is None")
    if df.is_empty():
        raise ValueError("DataFrame is empty")
    missing = [col for col in required_columns or [] if col not in df.columns]
    if missing:
        raise ValueError(f"Missing required columns: {missing}")


def frame_metadata(df: pl.DataFrame, **extra: object) -> dict:
    """Row count, columns and dtypes of a frame, plus step-specific fields."""
    return {
        "row_count": len(df),
        "columns": list(df.columns),
        "dtypes": {col: str(dtype) for col, dtype in zip(df.columns, df.dtypes)},
        **extra,
    }
