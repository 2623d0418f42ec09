"""Shared utilities for Dagster orchestration."""

import polars as pl
from dagster import MetadataValue, Output


def df_to_markdown_table(df: pl.DataFrame, float_digits: int = 4) -> str:
    """Convert Polars DataFrame to markdown table format.

    Args:
        df: Polars DataFrame to convert
        float_digits: Significant digits shown for float cells

    Returns:
        Markdown-formatted table string
    """
    headers = df.columns
    header_row = "| " + " | ".join(headers) + " |"
    separator_row = "| " + " | ".join(["---" for _ in headers]) + " |"

    def cell(value: object) -> str:
        if isinstance(value, float):
            return f"{value:.{float_digits}g}"
        return "" if value is None else str(value)

    data_rows = ["| " + " | ".join(cell(v) for v in row) + " |" for row in df.iter_rows()]
    return "\n".join([header_row, separator_row, *data_rows])


def create_output_with_metadata(
    file_path: str,
    df: pl.DataFrame,
    metadata: dict | None = None,
    sample_size: int = 20,
) -> Output:
    """Create Dagster Output with standard metadata for a parquet file.

    Args:
        file_path: Path to the parquet file
        df: DataFrame produced by the pipeline step
        metadata: Step metadata; row_count, columns and dtypes are standard,
            any other scalar entries (sweep sizes, max_k) are passed through
        sample_size: Number of rows to include in preview (default 20)

    Returns:
        Output whose value is the file path
    """
    metadata = metadata or {}
    output_metadata = {
        "row_count": metadata.get("row_count", len(df)),
        "column_count": df.width,
        "columns": MetadataValue.json(list(df.columns)),
        "column_types": MetadataValue.json(
            {col: str(dtype) for col, dtype in zip(df.columns, df.dtypes)}
        ),
        "preview": MetadataValue.md(df_to_markdown_table(df.head(sample_size))),
        "file_path": file_path,
    }
    for key, value in metadata.items():
        if key in ("row_count", "columns", "dtypes"):
            continue
        output_metadata[key] = MetadataValue.json(value) if isinstance(value, (list, dict)) else value

    return Output(value=file_path, metadata=output_metadata)
