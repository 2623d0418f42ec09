"""Persistence for peeling traces, layer tables and pipeline outputs.

Every file is written to a temporary sibling and renamed into place, so an
interrupted run never leaves a truncated output behind.
"""

from __future__ import annotations

import json
import logging
import os
import tempfile
from collections.abc import Callable
from typing import Any

import polars as pl

from .analysis import ratio_from_measures
from .geom_core import ConvexPolygon, Point
from .peeling import LayerRecord, PeelingTrace, TraceSource
from .paths import layer_dir

# Configure logging
logging.basicConfig(
    level=logging.INFO, format="%(asctime)s - %(name)s - %(levelname)s - %(message)s"
)
logger = logging.getLogger(__name__)

INT64_MAX = 2**63 - 1

SUMMARY_COLUMNS = [
    "layer_index",
    "vertex_count",
    "doubled_area",
    "perimeter",
    "isoperimetric_ratio",
]


def _atomic_write(path: str, writer: Callable[[str], None]) -> str:
    """Run ``writer`` against a temp file next to ``path``, then rename it over."""
    directory = os.path.dirname(os.path.abspath(path)) or "."
    fd, tmp_path = tempfile.mkstemp(
        prefix=f".{os.path.basename(path)}.", suffix=".tmp", dir=directory
    )
    os.close(fd)
    try:
        writer(tmp_path)
        os.replace(tmp_path, path)
    except BaseException:
        if os.path.exists(tmp_path):
            os.remove(tmp_path)
        raise
    logger.debug(f"Wrote {path}")
    return path


def atomic_write_text(path: str, text: str) -> str:
    def write(tmp_path: str) -> None:
        with open(tmp_path, "w", encoding="utf-8") as handle:
            handle.write(text)

    return _atomic_write(path, write)


def trace_to_dict(trace: PeelingTrace) -> dict[str, Any]:
    return {
        "source": {
            "generator": trace.source.generator,
            "params": dict(trace.source.params),
        },
        "tau": trace.tau,
        "layers": [
            {
                "index": layer.index,
                "vertex_count": layer.vertex_count,
                "doubled_area": layer.doubled_area,
                "perimeter": layer.perimeter,
                "vertices": (
                    [[p.x, p.y] for p in layer.polygon.vertices]
                    if layer.polygon is not None
                    else None
                ),
            }
            for layer in trace.layers
        ],
    }


def trace_from_dict(document: dict[str, Any]) -> PeelingTrace:
    """Rebuild a trace; raises ValueError if the document is inconsistent."""
    try:
        source = TraceSource(
            generator=document["source"]["generator"],
            params=dict(document["source"]["params"]),
        )
        layers = []
        for entry in document["layers"]:
            vertices = entry.get("vertices")
            polygon = (
                ConvexPolygon.from_vertices([Point(x, y) for x, y in vertices])
                if vertices is not None
                else None
            )
            layers.append(
                LayerRecord(
                    index=int(entry["index"]),
                    vertex_count=int(entry["vertex_count"]),
                    doubled_area=int(entry["doubled_area"]),
                    perimeter=float(entry["perimeter"]),
                    polygon=polygon,
                )
            )
    except (KeyError, TypeError) as e:
        raise ValueError(f"Malformed trace document: {e}") from e

    trace = PeelingTrace(source, tuple(layers))
    if "tau" in document and document["tau"] != trace.tau:
        raise ValueError(
            f"Trace document declares tau={document['tau']} but has {trace.tau} layers"
        )
    return trace


def write_trace_json(trace: PeelingTrace, path: str) -> str:
    """Write a trace as JSON; integers stay integers."""
    logger.info(f"Writing trace {trace.source.label()} (tau={trace.tau}) to {path}")
    return atomic_write_text(path, json.dumps(trace_to_dict(trace), indent=1) + "\n")


def read_trace_json(path: str) -> PeelingTrace:
    with open(path, encoding="utf-8") as handle:
        return trace_from_dict(json.load(handle))


def _integer_series(name: str, values: list[int]) -> pl.Series:
    # Nested-squares areas outgrow Int64; keep those exact as decimal strings.
    if values and max(abs(v) for v in values) > INT64_MAX:
        return pl.Series(name, [str(v) for v in values], dtype=pl.Utf8)
    return pl.Series(name, values, dtype=pl.Int64)


def trace_to_frame(trace: PeelingTrace, **labels: Any) -> pl.DataFrame:
    """One row per layer with the summary columns, prefixed by ``labels``."""
    layers = trace.layers
    columns = [
        pl.Series(name, [value] * len(layers)) for name, value in labels.items()
    ]
    columns += [
        pl.Series("layer_index", [layer.index for layer in layers], dtype=pl.Int64),
        pl.Series("vertex_count", [layer.vertex_count for layer in layers], dtype=pl.Int64),
        _integer_series("doubled_area", [layer.doubled_area for layer in layers]),
        pl.Series("perimeter", [layer.perimeter for layer in layers], dtype=pl.Float64),
        pl.Series(
            "isoperimetric_ratio",
            [
                ratio_from_measures(layer.doubled_area, layer.perimeter)
                if layer.is_proper
                else None
                for layer in layers
            ],
            dtype=pl.Float64,
        ),
    ]
    return pl.DataFrame(columns)


def write_summary_csv(trace: PeelingTrace, path: str) -> str:
    """Per-layer CSV; the ratio cell is empty for degenerate layers."""
    df = trace_to_frame(trace).select(SUMMARY_COLUMNS)
    logger.info(f"Writing {df.height} layer rows to {path}")
    return _atomic_write(path, df.write_csv)


def write_frame_csv(df: pl.DataFrame, path: str) -> str:
    return _atomic_write(path, df.write_csv)


def write_parquet(df: pl.DataFrame, layer: str, filename: str) -> str:
    """Write a DataFrame into a data layer directory."""
    if df is None:
        raise ValueError("DataFrame cannot be None")
    if not filename:
        raise ValueError("Filename must be a non-empty string")

    output_path = os.path.join(layer_dir(layer), filename)
    try:
        _atomic_write(output_path, df.write_parquet)
    except OSError:
        raise
    except Exception as e:
        logger.error(f"Failed to write parquet file to {output_path}: {e}")
        raise RuntimeError(f"Local storage write failed: {e}") from e
    logger.info(f"Successfully wrote {len(df)} rows to {output_path}")
    return output_path


def read_parquet_latest(layer: str, prefix: str) -> pl.DataFrame:
    """Read the latest parquet file for a given prefix.

    Args:
        layer: Data layer (bronze, silver, gold)
        prefix: Filename prefix to match

    Returns:
        Polars DataFrame

    Raises:
        FileNotFoundError: If no matching files are found
        RuntimeError: If reading fails
    """
    if not prefix:
        raise ValueError(f"Prefix must be a non-empty string, got: {prefix}")

    directory = layer_dir(layer)
    candidates = [
        filename
        for filename in os.listdir(directory)
        if filename.startswith(prefix) and filename.endswith(".parquet")
    ]
    if not candidates:
        raise FileNotFoundError(
            f"No parquet files found in {directory} with prefix {prefix}"
        )

    file_path = os.path.join(directory, max(candidates))
    try:
        df = pl.read_parquet(file_path)
    except Exception as e:
        logger.error(f"Failed to read parquet file {file_path}: {e}")
        raise RuntimeError(f"Local storage read failed: {e}") from e
    logger.info(f"Successfully read {len(df)} rows from {file_path}")
    return df
