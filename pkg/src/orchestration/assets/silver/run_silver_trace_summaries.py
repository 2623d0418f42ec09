"""Silver trace summaries asset."""

from dagster import AutomationCondition, asset

from src.core.silver_trace_summaries import transform
from src.orchestration.utils import create_output_with_metadata


@asset(
    group_name="silver",
    description="Summarize every peeled trace: tau, largest layer, circularity",
    compute_kind="polars",
    automation_condition=AutomationCondition.eager(),
    deps=["run_bronze_grid_layers", "run_bronze_squares_layers"],
)
def run_silver_trace_summaries():
    """Run silver trace summaries."""
    silver_path, df, metadata = transform()
    return create_output_with_metadata(silver_path, df, metadata)
