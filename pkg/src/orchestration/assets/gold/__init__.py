"""Gold assets package initialization."""

from src.orchestration.assets.gold.run_gold_proof_checks import run_gold_proof_checks
from src.orchestration.assets.gold.run_gold_scaling_fits import run_gold_scaling_fits

__all__ = ["run_gold_scaling_fits", "run_gold_proof_checks"]
