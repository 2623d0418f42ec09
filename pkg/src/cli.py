"""Command-line interface for the grid peeling engine.

Usage:
  grid-peeling peel --grid 11 --svg out.svg
  grid-peeling peel --squares 6 --trace squares.json --csv squares.csv
  grid-peeling fit --grid 32 64 128 256 --quantity tau
  grid-peeling lines --n 100 --mu 4
  grid-peeling totient --mu 1000
  grid-peeling activity --grid 30 --mu 3 --csv activity.csv
"""

from __future__ import annotations

import logging
from typing import Optional

import typer
from rich.console import Console
from rich.logging import RichHandler

from src.core import settings
from src.core.analysis import Quantity
from src.core.constructions import GridSpec, SquaresSpec
from src.core.errors import CapacityError
from src.core.peeling import TraceMode
from src.core.runner import Command, ExitCode, RunConfig, run

app = typer.Typer(
    help="Exact convex-layer peeling of integer grids and nested squares.",
    no_args_is_help=True,
)
console = Console()


def _exit(config_factory) -> None:
    """Build the config, run it and exit with the command's status."""
    try:
        config = config_factory()
    except CapacityError as e:
        console.print(f"[red]error:[/red] {e}")
        raise typer.Exit(code=ExitCode.CAPACITY) from e
    except ValueError as e:
        console.print(f"[red]error:[/red] {e}")
        raise typer.Exit(code=ExitCode.USAGE) from e
    raise typer.Exit(code=int(run(config, console)))


def _source(grid: int | None, squares: int | None) -> GridSpec | SquaresSpec:
    if (grid is None) == (squares is None):
        raise ValueError("Give exactly one of --grid N or --squares K")
    return GridSpec(grid) if grid is not None else SquaresSpec(squares)  # type: ignore[arg-type]


@app.callback()
def main_callback(
    verbose: bool = typer.Option(False, "--verbose", "-v", help="Debug logging"),
) -> None:
    level = logging.DEBUG if verbose else settings.LOG_LEVEL
    logging.basicConfig(
        level=level,
        format="%(message)s",
        handlers=[RichHandler(console=Console(stderr=True), show_path=False)],
        force=True,
    )


@app.command()
def peel(
    grid: Optional[int] = typer.Option(None, "--grid", help="Peel Grid(N)"),
    squares: Optional[int] = typer.Option(None, "--squares", help="Peel nested squares, K squares"),
    trace: Optional[str] = typer.Option(None, "--trace", help="Write the trace as JSON"),
    csv: Optional[str] = typer.Option(None, "--csv", help="Write per-layer CSV"),
    svg: Optional[str] = typer.Option(None, "--svg", help="Write the layer picture"),
    count_only: bool = typer.Option(False, "--count-only", help="Keep counts, not polygons"),
) -> None:
    """Peel a point set and report tau."""
    _exit(
        lambda: RunConfig(
            command=Command.PEEL,
            source=_source(grid, squares),
            mode=TraceMode.COUNT_ONLY if count_only else TraceMode.FULL,
            trace_path=trace,
            csv_path=csv,
            svg_path=svg,
        )
    )


@app.command(context_settings={"allow_extra_args": True, "ignore_unknown_options": True})
def fit(
    ctx: typer.Context,
    grid: int = typer.Option(..., "--grid", help="Grid sides: --grid N1 N2 ..."),
    quantity: Quantity = typer.Option(Quantity.TAU, "--quantity", case_sensitive=False),
    csv: Optional[str] = typer.Option(None, "--csv", help="Write the samples as CSV"),
    workers: int = typer.Option(settings.FIT_WORKERS, "--workers", help="Concurrent runs"),
) -> None:
    """Fit the power-law exponent of tau or the largest layer against n."""

    def build() -> RunConfig:
        try:
            extra = [int(arg) for arg in ctx.args]
        except ValueError as e:
            raise ValueError(f"Grid sizes must be integers, got: {ctx.args}") from e
        return RunConfig(
            command=Command.FIT,
            grid_sizes=(grid, *extra),
            quantity=quantity,
            csv_path=csv,
            workers=workers,
        )

    _exit(build)


@app.command()
def lines(
    n: int = typer.Option(..., "--n", help="Grid side"),
    mu: int = typer.Option(..., "--mu", help="Largest direction component"),
) -> None:
    """Per-direction line counts |L_v| and the 4*n*mu bound."""
    _exit(lambda: RunConfig(command=Command.LINES, n=n, mu=mu))


@app.command()
def totient(mu: int = typer.Option(..., "--mu")) -> None:
    """Sum of phi(x) for x <= mu and its density against mu^2."""
    _exit(lambda: RunConfig(command=Command.TOTIENT, mu=mu))


@app.command()
def activity(
    grid: int = typer.Option(..., "--grid", help="Grid side"),
    mu: int = typer.Option(..., "--mu"),
    csv: Optional[str] = typer.Option(None, "--csv", help="Write per-layer activity"),
) -> None:
    """Active directions of V(mu) at every layer of Grid(n)."""
    _exit(
        lambda: RunConfig(
            command=Command.ACTIVITY, source=GridSpec(grid), mu=mu, csv_path=csv
        )
    )


def main() -> None:
    app()


if __name__ == "__main__":
    main()
