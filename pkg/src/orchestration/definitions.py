"""Dagster definitions for the peeling experiment pipeline.

Bronze assets peel the configured grids and nested-squares sets; silver and
gold assets materialize eagerly once their inputs change.
"""

from dagster import (
    AssetSelection,
    Definitions,
    define_asset_job,
    load_assets_from_modules,
)

from src.orchestration.assets import bronze, gold, silver

# Automatically load all assets from each layer
bronze_assets = load_assets_from_modules([bronze], group_name="bronze")
silver_assets = load_assets_from_modules([silver], group_name="silver")
gold_assets = load_assets_from_modules([gold], group_name="gold")

all_assets = [*bronze_assets, *silver_assets, *gold_assets]

# Full sweep: peel, summarize, fit and check
sweep_job = define_asset_job("peeling_sweep_job", selection=AssetSelection.all())

defs = Definitions(assets=all_assets, jobs=[sweep_job])
