"""Shared fixtures for the peeling test suite."""

from functools import lru_cache

import pytest

from src.core.constructions import GridSpec, SquaresSpec, make_grid, make_nested_squares
from src.core.peeling import PeelingTrace, TraceMode, TraceSource, peel


@lru_cache(maxsize=None)
def grid_trace(n: int, count_only: bool = False) -> PeelingTrace:
    """Peel Grid(n) once per session."""
    spec = GridSpec(n)
    mode = TraceMode.COUNT_ONLY if count_only else TraceMode.FULL
    return peel(make_grid(spec), TraceSource(spec.generator, spec.params()), mode)


@lru_cache(maxsize=None)
def squares_trace(k: int) -> PeelingTrace:
    spec = SquaresSpec(k)
    return peel(make_nested_squares(spec), TraceSource(spec.generator, spec.params()))


def layer_sizes(trace: PeelingTrace) -> list[int]:
    return [layer.vertex_count for layer in trace.layers]


@pytest.fixture
def data_dir(tmp_path, monkeypatch):
    """Point pipeline storage at a temporary data root."""
    root = tmp_path / "data"
    monkeypatch.setenv("PEELING_DATA_DIR", str(root))
    return root
