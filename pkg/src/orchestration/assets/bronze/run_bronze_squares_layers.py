"""Bronze nested squares layers asset."""

from dagster import asset

from src.core.bronze_squares_layers import extract
from src.orchestration.utils import create_output_with_metadata


@asset(
    group_name="bronze",
    description="Peel the nested-squares sets k = 1..SQUARES_SWEEP_MAX_K",
    compute_kind="polars",
)
def run_bronze_squares_layers():
    """Run bronze nested squares extraction."""
    bronze_path, df, metadata = extract()
    return create_output_with_metadata(bronze_path, df, metadata)
