"""Silver assets package initialization."""

from src.orchestration.assets.silver.run_silver_trace_summaries import (
    run_silver_trace_summaries,
)

__all__ = ["run_silver_trace_summaries"]
