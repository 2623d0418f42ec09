"""Gold scaling fits asset."""

from dagster import AutomationCondition, asset

from src.core.gold_scaling_fits import aggregate
from src.orchestration.utils import create_output_with_metadata


@asset(
    group_name="gold",
    description="Fit the exponents of tau(n) and the largest layer size",
    compute_kind="numpy",
    automation_condition=AutomationCondition.eager(),
    deps=["run_silver_trace_summaries"],
)
def run_gold_scaling_fits():
    """Run gold scaling fits."""
    gold_path, df, metadata = aggregate()
    return create_output_with_metadata(gold_path, df, metadata)
