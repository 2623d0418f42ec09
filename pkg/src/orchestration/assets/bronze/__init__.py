"""Bronze assets package initialization."""

from src.orchestration.assets.bronze.run_bronze_grid_layers import run_bronze_grid_layers
from src.orchestration.assets.bronze.run_bronze_squares_layers import (
    run_bronze_squares_layers,
)

__all__ = ["run_bronze_grid_layers", "run_bronze_squares_layers"]
