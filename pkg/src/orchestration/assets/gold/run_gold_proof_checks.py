"""Gold proof checks asset."""

from dagster import AutomationCondition, asset

from src.core.gold_proof_checks import aggregate
from src.orchestration.utils import create_output_with_metadata


@asset(
    group_name="gold",
    description="Activity, line-bound and decrement checks on small grids",
    compute_kind="python",
    automation_condition=AutomationCondition.eager(),
    deps=["run_silver_trace_summaries"],
)
def run_gold_proof_checks():
    """Run gold proof checks."""
    gold_path, df, metadata = aggregate()
    return create_output_with_metadata(gold_path, df, metadata)
