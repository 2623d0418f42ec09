"""Bronze grid layers asset."""

from dagster import asset

from src.core.bronze_grid_layers import extract
from src.orchestration.utils import create_output_with_metadata


@asset(
    group_name="bronze",
    description="Peel the integer grids of the sweep, one row per layer",
    compute_kind="polars",
)
def run_bronze_grid_layers():
    """Run bronze grid layers extraction."""
    bronze_path, df, metadata = extract()
    return create_output_with_metadata(bronze_path, df, metadata)
