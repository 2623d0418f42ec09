"""Configuration settings for peeling experiments."""

import os

from dotenv import load_dotenv

# Load environment variables from .env file
load_dotenv()


def _int_list(raw: str) -> list[int]:
    return [int(part) for part in raw.split(",") if part.strip()]


# Logging
LOG_LEVEL = os.getenv("LOG_LEVEL", "INFO").upper()

# Pipeline sweep
GRID_SWEEP_SIZES = _int_list(os.getenv("GRID_SWEEP_SIZES", "16,32,64,128"))
SQUARES_SWEEP_MAX_K = int(os.getenv("SQUARES_SWEEP_MAX_K", "8"))
ACTIVITY_MAX_N = int(os.getenv("ACTIVITY_MAX_N", "40"))

# Concurrent count-only runs
FIT_WORKERS = int(os.getenv("FIT_WORKERS", "1"))

# Dagster home
DAGSTER_HOME = os.getenv("DAGSTER_HOME", ".dagster")
