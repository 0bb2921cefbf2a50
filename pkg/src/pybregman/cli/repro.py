"""Reproduction grids for the compressed sensing and matrix completion tables."""
from __future__ import annotations

import asyncio
import csv
import io
import json
import logging
from collections.abc import Callable
from concurrent.futures import Executor, ProcessPoolExecutor
from importlib import resources
from pathlib import Path
from typing import Any

from pybregman.errors import BregmanError, BregmanInputError
from pybregman.helpers import atomic_write_text, get_max_workers
from pybregman.problems import MatrixKind, SignalKind, default_bp_dims, gen_bp, gen_mc
from pybregman.solvers import Variant, make_config, run

from . import const
from .models import CellResult, CellSpec

_LOGGER = logging.getLogger(__name__)

CSV_FIELDS = (
    "name",
    "table",
    "row",
    "variant",
    "n",
    "iterations",
    "converged",
    "rel_error",
    "residual_rel",
    "wall_ns",
    "ref_iterations",
    "ref_error",
    "ratio",
    "error",
)


def load_reference_tables() -> dict[str, Any]:
    """Return the published iteration counts and errors shipped with the package."""
    data = resources.files("pybregman.cli").joinpath("data").joinpath(const.REFERENCE_TABLES)
    text = data.read_text(encoding="utf-8")
    return json.loads(text)


def parse_iterations(value: str) -> tuple[int, bool]:
    """Parse "330" or "5000+" into (count, capped)."""
    capped = value.endswith("+")
    return int(value.rstrip("+")), capped


def scaled_dim(n: int, scale: float) -> int:
    """Return round(n * scale), at least 1."""
    return max(1, round(n * scale))


def table1_specs(
    out_dir: Path,
    scale: float = 1.0,
    seed: int = 0,
    max_iters: int | None = None,
) -> list[CellSpec]:
    """Return LB and ALB cells for every (matrix, signal) row."""
    table = load_reference_tables()["table1"]
    n = scaled_dim(table["n"], scale)
    return [
        CellSpec(
            table=1,
            row=row,
            variant=variant,
            seed=seed,
            out_dir=out_dir,
            matrix=MatrixKind(entry["matrix"]),
            signal=SignalKind(entry["signal"]),
            n=n,
            max_iters=max_iters or table["max_iters"],
        )
        for row, entry in enumerate(table["rows"])
        for variant in (Variant.LB, Variant.ALB)
    ]


def table2_specs(
    out_dir: Path,
    scale: float = 1.0,
    max_n: int = const.TABLE2_MAX_N,
    seed: int = 0,
    max_iters: int | None = None,
) -> list[CellSpec]:
    """Return LB and ALB cells for every (n, FR) row with n <= max_n."""
    table = load_reference_tables()["table2"]
    return [
        CellSpec(
            table=2,
            row=row,
            variant=variant,
            seed=seed,
            out_dir=out_dir,
            n=scaled_dim(entry["n"], scale),
            fr=entry["fr"],
            rank=table["r"],
            max_iters=max_iters or table["max_iters"],
        )
        for row, entry in enumerate(table["rows"])
        if entry["n"] <= max_n
        for variant in (Variant.LB, Variant.ALB)
    ]


def run_cell(spec: CellSpec) -> CellResult:
    """Generate the instance of a cell, solve it and write its trace.

    Solver and input errors are recorded on the result instead of raised.
    """
    try:
        problem: Any
        if spec.table == 1 and spec.matrix is not None and spec.signal is not None:
            n, m, s = default_bp_dims(spec.n)
            problem = gen_bp(spec.matrix, spec.signal, n, m, s, spec.seed)
        elif spec.table == 2 and spec.rank is not None and spec.fr is not None:
            problem = gen_mc(spec.n, spec.rank, spec.fr, spec.seed)
        else:
            raise BregmanInputError(f"cell {spec.name} misses its instance parameters")
        config = make_config(problem, max_iters=spec.max_iters)
        trace = run(problem, config, spec.variant)
    except BregmanError as exception:
        _LOGGER.warning("Cell %s failed: %s", spec.name, exception)
        return CellResult(
            name=spec.name,
            table=spec.table,
            row=spec.row,
            variant=spec.variant.value,
            n=spec.n,
            error=str(exception),
        )

    cell_dir = spec.out_dir / spec.name
    trace.write_csv(cell_dir / const.TRACE_FILE)
    trace.write_summary(cell_dir / const.SUMMARY_FILE)
    last = trace.last
    return CellResult(
        name=spec.name,
        table=spec.table,
        row=spec.row,
        variant=spec.variant.value,
        n=spec.n,
        iterations=trace.iterations,
        converged=trace.converged,
        rel_error=None if last is None else last.rel_error,
        residual_rel=None if last is None else last.residual_rel,
        wall_ns=None if last is None else last.wall_ns,
    )


async def run_grid(
    specs: list[CellSpec],
    max_workers: int | None = None,
    executor_factory: Callable[[int], Executor] = ProcessPoolExecutor,
) -> list[CellResult]:
    """Run the cells concurrently, at most max_workers at a time.

    Args:
    ----
        specs: cells to run
        max_workers: defaults to BREGMAN_ACCEL_THREADS or the cpu count
        executor_factory: builds the executor from the worker count

    Returns:
    -------
        One CellResult per spec, in order.
    """
    workers = max_workers or get_max_workers()
    loop = asyncio.get_running_loop()
    semaphore = asyncio.Semaphore(workers)
    _LOGGER.info("Running %d cells on %d workers", len(specs), workers)

    with executor_factory(workers) as executor:

        async def one(spec: CellSpec) -> CellResult:
            async with semaphore:
                try:
                    return await loop.run_in_executor(executor, run_cell, spec)
                except Exception as exception:  # noqa: BLE001
                    _LOGGER.warning("Cell %s crashed: %s", spec.name, exception)
                    return CellResult(
                        name=spec.name,
                        table=spec.table,
                        row=spec.row,
                        variant=spec.variant.value,
                        n=spec.n,
                        error=repr(exception),
                    )

        return list(await asyncio.gather(*(one(spec) for spec in specs)))


def _reference_entry(result: CellResult, tables: dict[str, Any]) -> tuple[str, float]:
    entry = tables[f"table{result.table}"]["rows"][result.row]
    prefix = "lb" if result.variant == Variant.LB.value else "alb"
    return entry[f"{prefix}_iters"], entry[f"{prefix}_err"]


def _ratio(result: CellResult, reference_iters: str) -> float | None:
    if result.iterations is None:
        return None
    count, _ = parse_iterations(reference_iters)
    return result.iterations / count


def _iterations_label(result: CellResult) -> str:
    if result.error is not None or result.iterations is None:
        return "failed"
    return str(result.iterations) if result.converged else f"{result.iterations}+"


def _error_label(value: float | None) -> str:
    return "NA" if value is None else f"{value:.4e}"


def results_csv(results: list[CellResult], tables: dict[str, Any]) -> str:
    """Return one CSV row per cell with its reference numbers and iteration ratio."""
    buffer = io.StringIO()
    writer = csv.DictWriter(buffer, fieldnames=CSV_FIELDS, lineterminator="\n")
    writer.writeheader()
    for result in results:
        ref_iters, ref_error = _reference_entry(result, tables)
        ratio = _ratio(result, ref_iters)
        row = result.dict()
        row.update(
            ref_iterations=ref_iters,
            ref_error=repr(ref_error),
            ratio="NA" if ratio is None else f"{ratio:.3f}",
        )
        writer.writerow({key: "NA" if row[key] is None else row[key] for key in CSV_FIELDS})
    return buffer.getvalue()


def results_markdown(results: list[CellResult], tables: dict[str, Any]) -> str:
    """Return a side-by-side markdown table: measured vs reference per row."""
    by_row: dict[tuple[int, int], dict[str, CellResult]] = {}
    for result in results:
        by_row.setdefault((result.table, result.row), {})[result.variant] = result

    lines: list[str] = []
    for (table, row), cells in sorted(by_row.items()):
        entry = tables[f"table{table}"]["rows"][row]
        if not lines:
            key = "Matrix | Signal" if table == 1 else "n | FR | SR"
            lines.append(
                f"| {key} | LB iters | LB ref | ALB iters | ALB ref "
                "| LB err | LB err ref | ALB err | ALB err ref | ALB/LB |"
            )
            lines.append("|" + "---|" * (lines[0].count("|") - 1))
        label = (
            f"{entry['matrix']} | {entry['signal']}"
            if table == 1
            else f"{entry['n']} | {entry['fr']} | {entry['sr']}"
        )
        lb, alb = cells.get(Variant.LB.value), cells.get(Variant.ALB.value)
        speedup = "NA"
        if lb and alb and lb.iterations and alb.iterations:
            speedup = f"{alb.iterations / lb.iterations:.3f}"
        lines.append(
            f"| {label} "
            f"| {_iterations_label(lb) if lb else 'NA'} | {entry['lb_iters']} "
            f"| {_iterations_label(alb) if alb else 'NA'} | {entry['alb_iters']} "
            f"| {_error_label(lb.rel_error if lb else None)} | {entry['lb_err']:.4e} "
            f"| {_error_label(alb.rel_error if alb else None)} | {entry['alb_err']:.4e} "
            f"| {speedup} |"
        )
    return "\n".join(lines) + "\n"


def write_results(results: list[CellResult], out_dir: Path) -> tuple[Path, Path]:
    """Write table.md and table.csv atomically."""
    tables = load_reference_tables()
    return (
        atomic_write_text(out_dir / const.TABLE_MARKDOWN_FILE, results_markdown(results, tables)),
        atomic_write_text(out_dir / const.TABLE_CSV_FILE, results_csv(results, tables)),
    )
