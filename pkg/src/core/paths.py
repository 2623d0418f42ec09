"""Path utilities for peeling experiments."""

import os

# Dynamically find the project root (parent of src)
current_dir = os.path.dirname(__file__)
while True:
    if os.path.basename(current_dir) == "src":
        PROJECT_ROOT = os.path.dirname(current_dir)
        break
    parent = os.path.dirname(current_dir)
    if parent == current_dir:  # Reached root
        raise ValueError("Could not find 'src' folder in the path")
    current_dir = parent
PROJECT_ROOT = os.path.abspath(PROJECT_ROOT)

DEFAULT_DATA_DIR = os.path.join(PROJECT_ROOT, "data")

# bronze: raw layer tables, silver: per-trace summaries, gold: fits and checks
LAYERS = ("bronze", "silver", "gold")


def get_data_dir() -> str:
    """Data root, overridable through PEELING_DATA_DIR."""
    return os.getenv("PEELING_DATA_DIR", DEFAULT_DATA_DIR)


def layer_dir(layer: str) -> str:
    """Directory for a data layer, created on first use."""
    if layer not in LAYERS:
        raise ValueError(f"Unknown data layer: {layer}. Must be one of {LAYERS}")
    directory = os.path.join(get_data_dir(), layer)
    os.makedirs(directory, exist_ok=True)
    return directory
