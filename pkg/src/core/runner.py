"""Command pipelines behind the CLI: peel, fit, lines, totient, activity."""

from __future__ import annotations

import logging
import math
from dataclasses import dataclass, field
from enum import Enum, IntEnum

import polars as pl
from rich.console import Console
from rich.table import Table

from . import settings
from .analysis import Quantity, fit_power_law, sweep, trace_summary
from .constructions import GridSpec, SourceSpec, make_points
from .errors import CapacityError
from .figures import render_svg
from .peeling import TraceMode, TraceSource, peel
from .proof_lab import (
    activity_trace,
    count_grid_lines,
    max_line_points,
    primitive_vectors,
    totient_sum,
    typical_line_points,
)
from .storage import write_frame_csv, write_summary_csv, write_trace_json
from .utils import time_operation

logger = logging.getLogger(__name__)


class Command(str, Enum):
    PEEL = "peel"
    FIT = "fit"
    LINES = "lines"
    TOTIENT = "totient"
    ACTIVITY = "activity"


class ExitCode(IntEnum):
    OK = 0
    USAGE = 2
    CAPACITY = 3
    IO = 4


@dataclass(frozen=True)
class RunConfig:
    command: Command
    source: SourceSpec | None = None
    grid_sizes: tuple[int, ...] = ()
    n: int | None = None
    mu: int | None = None
    quantity: Quantity = Quantity.TAU
    mode: TraceMode = TraceMode.FULL
    trace_path: str | None = None
    csv_path: str | None = None
    svg_path: str | None = None
    workers: int = field(default_factory=lambda: settings.FIT_WORKERS)

    def validate(self) -> None:
        """Raise ValueError when the options do not fit the command."""
        if self.command in (Command.PEEL, Command.ACTIVITY) and self.source is None:
            raise ValueError(f"'{self.command.value}' needs exactly one point source")
        if self.command is Command.ACTIVITY and not isinstance(self.source, GridSpec):
            raise ValueError("'activity' is defined for Grid(n) only")
        if self.command is Command.FIT and len(set(self.grid_sizes)) < 2:
            raise ValueError("'fit' needs at least two distinct grid sizes")
        if self.command is Command.FIT and min(self.grid_sizes) < 2:
            raise ValueError("'fit' needs grid sizes >= 2")
        if self.command in (Command.LINES, Command.TOTIENT, Command.ACTIVITY):
            if self.mu is None or self.mu < 1:
                raise ValueError(f"'{self.command.value}' needs --mu >= 1")
        if self.command is Command.LINES and (self.n is None or self.n < 2):
            raise ValueError("'lines' needs --n >= 2")
        if self.svg_path and self.mode is TraceMode.COUNT_ONLY:
            raise ValueError("--svg needs the full trace; drop --count-only")


def _source_of(spec: SourceSpec) -> TraceSource:
    return TraceSource(spec.generator, spec.params())


def _run_peel(config: RunConfig, console: Console) -> None:
    spec = config.source
    assert spec is not None
    points = make_points(spec)
    with time_operation(f"peel {_source_of(spec).label()}"):
        trace = peel(points, _source_of(spec), config.mode)
    summary = trace_summary(trace)

    if config.trace_path:
        write_trace_json(trace, config.trace_path)
    if config.csv_path:
        write_summary_csv(trace, config.csv_path)
    if config.svg_path:
        render_svg(trace, config.svg_path)

    console.print(
        f"{trace.source.label()}: points={summary.total_points} tau={summary.tau} "
        f"max_layer={summary.max_vertex_count} (layer {summary.argmax_index})"
    )


def _run_fit(config: RunConfig, console: Console) -> None:
    with time_operation(f"{config.quantity.value} sweep over {sorted(config.grid_sizes)}"):
        samples = sweep(config.grid_sizes, config.quantity, config.workers)
    fit = fit_power_law(samples)

    if config.csv_path:
        df = pl.DataFrame(
            {"n": [s.n for s in samples], config.quantity.value: [s.value for s in samples]}
        )
        write_frame_csv(df, config.csv_path)

    table = Table(title=f"{config.quantity.value} vs n")
    table.add_column("n", justify="right")
    table.add_column(config.quantity.value, justify="right")
    for sample in samples:
        table.add_row(str(sample.n), f"{sample.value:g}")
    console.print(table)
    console.print(
        f"slope={fit.slope:.4f} intercept={fit.intercept:.4f} r2={fit.r_squared:.5f} "
        f"(expected exponent {config.quantity.expected_exponent:.4f})"
    )


def _run_lines(config: RunConfig, console: Console) -> None:
    n, mu = config.n, config.mu
    assert n is not None and mu is not None
    bound = 4 * n * mu
    table = Table(title=f"|L_v| over Grid({n}), bound 4*n*mu = {bound}")
    for column in ("v", "lines", "typical points/line", "max points/line", "within bound"):
        table.add_column(column, justify="right")
    worst = 0
    for v in primitive_vectors(mu):
        lines = count_grid_lines(v, n)
        worst = max(worst, lines)
        table.add_row(
            f"({v.vx},{v.vy})",
            str(lines),
            str(typical_line_points(v, n)),
            str(max_line_points(v, n)),
            "yes" if lines <= bound else "NO",
        )
    console.print(table)
    console.print(f"max |L_v| = {worst}, bound = {bound}")


def _run_totient(config: RunConfig, console: Console) -> None:
    mu = config.mu
    assert mu is not None
    total = totient_sum(mu)
    console.print(
        f"mu={mu} sum_phi={total} density={total / (mu * mu):.6f} "
        f"(3/pi^2 = {3 / math.pi**2:.6f})"
    )


def _run_activity(config: RunConfig, console: Console) -> None:
    spec = config.source
    assert isinstance(spec, GridSpec) and config.mu is not None
    trace = peel(make_points(spec), _source_of(spec))
    with time_operation(f"activity Grid({spec.n}) mu={config.mu}"):
        activity = activity_trace(trace, config.mu)

    if config.csv_path:
        df = pl.DataFrame(
            {
                "layer_index": [r.index for r in activity.per_iteration],
                "active_count": activity.active_counts(),
                "vertex_count": [layer.vertex_count for layer in trace.layers],
            }
        )
        write_frame_csv(df, config.csv_path)

    console.print(
        f"Grid({spec.n}) mu={config.mu}: |V|={len(activity.directions)} "
        f"tau={trace.tau} alpha={activity.alpha} M={activity.m_budget} "
        f"max_inactive={max(activity.inactive_counts)} "
        f"(budget {activity.inactive_budget})"
    )


_HANDLERS = {
    Command.PEEL: _run_peel,
    Command.FIT: _run_fit,
    Command.LINES: _run_lines,
    Command.TOTIENT: _run_totient,
    Command.ACTIVITY: _run_activity,
}


def run(config: RunConfig, console: Console | None = None) -> int:
    """Execute one command and return its process exit status."""
    console = console or Console()
    try:
        config.validate()
        _HANDLERS[config.command](config, console)
    except CapacityError as e:
        logger.error(f"Capacity error: {e}")
        console.print(f"[red]error:[/red] {e}")
        return ExitCode.CAPACITY
    except OSError as e:
        logger.error(f"I/O error: {e}")
        console.print(f"[red]error:[/red] {e}")
        return ExitCode.IO
    except ValueError as e:
        logger.error(f"Invalid arguments: {e}")
        console.print(f"[red]error:[/red] {e}")
        return ExitCode.USAGE
    return ExitCode.OK
