"""End-to-end run of the bronze, silver and gold pipeline steps."""

import math
import os

import polars as pl
import pytest

from src.core import bronze_grid_layers, bronze_squares_layers, settings
from src.core import gold_proof_checks, gold_scaling_fits, silver_trace_summaries
from src.core.gold_proof_checks import check_grid, default_mu
from src.core.silver_trace_summaries import summarize
from src.core.utils import frame_metadata, validate_frame
from tests.conftest import grid_trace


@pytest.fixture
def bronze(data_dir):
    _, grids, _ = bronze_grid_layers.extract(sizes=[4, 8, 12, 16])
    _, squares, _ = bronze_squares_layers.extract(max_k=4)
    return grids, squares


class TestBronze:
    def test_grid_layers(self, bronze, data_dir):
        grids, _ = bronze
        assert grids.filter(pl.col("size") == 8).height == grid_trace(8).tau
        assert set(grids["family"].unique()) == {"grid"}
        assert len(list((data_dir / "bronze").glob("bronze_grid_layers_*.parquet"))) == 1

    def test_squares_layers(self, bronze):
        _, squares = bronze
        assert squares.schema["doubled_area"] == pl.Utf8
        assert sorted(squares["size"].unique().to_list()) == [2, 4, 6, 8]
        assert squares.filter(pl.col("size") == 8).height == 10


class TestSilver:
    def test_summaries(self, bronze):
        _, summaries, metadata = silver_trace_summaries.transform()
        assert metadata["row_count"] == 8
        row = summaries.filter((pl.col("family") == "grid") & (pl.col("size") == 16)).row(
            0, named=True
        )
        assert row["tau"] == grid_trace(16).tau
        assert row["total_points"] == 256
        assert row["first_ratio"] == pytest.approx(math.pi / 4)
        assert row["tau"] >= row["tau_lower_bound"]

    def test_summarize_small_table(self):
        layers = pl.DataFrame(
            {
                "family": ["grid", "grid"],
                "size": [3, 3],
                "layer_index": [1, 2],
                "vertex_count": [4, 4],
                "isoperimetric_ratio": [math.pi / 4, math.pi / 4],
            }
        )
        summary = summarize(layers)
        assert summary["total_points"].to_list() == [8]
        assert summary["argmax_layer"].to_list() == [1]


class TestGold:
    def test_scaling_fits(self, bronze):
        silver_trace_summaries.transform()
        _, fits, _ = gold_scaling_fits.aggregate()
        assert set(zip(fits["family"], fits["quantity"])) == {
            ("grid", "tau"),
            ("grid", "max_vertex_count"),
            ("squares", "tau"),
        }
        assert fits["sample_count"].to_list() == [4, 4, 4]

    def test_proof_checks(self, bronze, monkeypatch):
        monkeypatch.setattr(settings, "ACTIVITY_MAX_N", 12)
        silver_trace_summaries.transform()
        _, checks, metadata = gold_proof_checks.aggregate()
        assert checks["n"].to_list() == [4, 8, 12]
        assert checks["decrement_violations"].to_list() == [0, 0, 0]
        assert all(checks["edge_bound_ok"].to_list())
        assert (checks["max_lines"] <= checks["line_bound"]).all()
        assert metadata["max_n"] == 12

    def test_needs_summaries(self, data_dir):
        with pytest.raises(FileNotFoundError):
            gold_scaling_fits.aggregate()


class TestProofCheckHelpers:
    @pytest.mark.parametrize("n, mu", [(1, 1), (7, 1), (8, 2), (26, 2), (27, 3), (64, 4)])
    def test_default_mu(self, n, mu):
        assert default_mu(n) == mu

    def test_check_grid_3(self):
        row = check_grid(3, mu=1)
        assert row["tau"] == 3
        assert row["alpha"] == 1
        assert row["m_budget"] == 12


def test_definitions_load():
    from src.orchestration.definitions import defs

    keys = {key.to_user_string() for key in defs.get_repository_def().assets_defs_by_key}
    assert keys == {
        "run_bronze_grid_layers",
        "run_bronze_squares_layers",
        "run_silver_trace_summaries",
        "run_gold_scaling_fits",
        "run_gold_proof_checks",
    }


class TestFrameValidation:
    def test_empty_frame(self):
        with pytest.raises(ValueError):
            validate_frame(pl.DataFrame({"size": []}))

    def test_missing_columns(self):
        with pytest.raises(ValueError, match="tau"):
            validate_frame(pl.DataFrame({"size": [4]}), ["size", "tau"])

    def test_metadata_extras(self):
        metadata = frame_metadata(pl.DataFrame({"size": [4, 8]}), sizes=[4, 8])
        assert metadata["row_count"] == 2
        assert metadata["sizes"] == [4, 8]


class TestPipelineEnvironment:
    def test_dagster_home_comes_from_settings(self, tmp_path, monkeypatch):
        import run_pipeline

        monkeypatch.setattr(settings, "DAGSTER_HOME", "instance")
        monkeypatch.setenv("PYTHONPATH", "elsewhere")
        env = run_pipeline.dagster_env(tmp_path)
        assert env["DAGSTER_HOME"] == str(tmp_path / "instance")
        assert (tmp_path / "instance").is_dir()
        assert env["PYTHONPATH"].split(os.pathsep) == [str(tmp_path), "elsewhere"]
