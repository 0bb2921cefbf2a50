"""Test the reproduction grids."""
from __future__ import annotations

import csv
import io
from concurrent.futures import ThreadPoolExecutor
from pathlib import Path

import pytest

from pybregman.cli import main
from pybregman.cli.models import CellResult, CellSpec
from pybregman.cli.repro import (
    CSV_FIELDS,
    load_reference_tables,
    parse_iterations,
    results_csv,
    results_markdown,
    run_cell,
    run_grid,
    scaled_dim,
    table1_specs,
    table2_specs,
    write_results,
)
from pybregman.helpers import THREADS_ENV_VAR
from pybregman.problems import MatrixKind, SignalKind
from pybregman.solvers import Variant


def test_reference_tables() -> None:
    """Test the shipped reference numbers."""
    tables = load_reference_tables()
    assert len(tables["table1"]["rows"]) == 6
    assert tables["table1"]["source"].startswith("published Table 1:")
    assert tables["table2"]["source"].startswith("published Table 2:")
    assert len(tables["table2"]["rows"]) == 10
    first = tables["table2"]["rows"][0]
    assert (first["n"], first["fr"]) == (100, 0.2)
    assert (first["lb_iters"], first["alb_iters"]) == ("85", "63")


@pytest.mark.parametrize(
    ("value", "expected"),
    [("330", (330, False)), ("5000+", (5000, True)), ("2000+", (2000, True))],
)
def test_parse_iterations(value: str, expected: tuple[int, bool]) -> None:
    """Test the capped iteration notation."""
    assert parse_iterations(value) == expected


def test_specs(tmp_path: Path) -> None:
    """Test the cells of both grids."""
    cells = table1_specs(tmp_path, scale=0.05)
    assert len(cells) == 12
    assert {cell.n for cell in cells} == {100}
    assert {cell.max_iters for cell in cells} == {5000}
    assert cells[0].name == "t1-gaussian-gaussian-n100-lb"
    assert cells[1].variant is Variant.ALB

    cells = table2_specs(tmp_path, max_n=200, max_iters=50)
    assert len(cells) == 8
    assert {cell.n for cell in cells} == {100, 200}
    assert {cell.max_iters for cell in cells} == {50}
    assert cells[0].name == "t2-n100-fr0.2-lb"
    assert scaled_dim(100, 0.001) == 1


def test_run_cell_records_failures(tmp_path: Path) -> None:
    """Test that an invalid cell becomes a failed result."""
    spec = CellSpec(
        table=2,
        row=0,
        variant=Variant.LB,
        seed=0,
        out_dir=tmp_path,
        n=10,
        fr=0.2,
        rank=10,
        max_iters=5,
    )
    result = run_cell(spec)
    assert result.error is not None
    assert result.iterations is None
    assert not result.converged


async def test_run_grid(tmp_path: Path) -> None:
    """Test a tiny grid on a thread pool."""
    specs = table1_specs(tmp_path, scale=0.02, max_iters=40)[:4]
    specs.append(
        CellSpec(
            table=2,
            row=0,
            variant=Variant.LB,
            seed=0,
            out_dir=tmp_path,
            n=10,
            fr=0.2,
            rank=10,
            max_iters=5,
        )
    )
    results = await run_grid(specs, max_workers=2, executor_factory=ThreadPoolExecutor)
    assert [result.name for result in results] == [spec.name for spec in specs]
    assert all(result.error is None for result in results[:4])
    assert results[4].error is not None
    assert (tmp_path / specs[0].name / "trace.csv").exists()
    assert (tmp_path / specs[0].name / "summary.json").exists()


def _cell(variant: Variant, iterations: int | None, converged: bool) -> CellResult:
    return CellResult(
        name=f"cell-{variant.value}",
        table=2,
        row=0,
        variant=variant.value,
        n=100,
        iterations=iterations,
        converged=converged,
        rel_error=1e-4 if iterations else None,
        error=None if iterations else "boom",
    )


def test_results_tables(tmp_path: Path) -> None:
    """Test the markdown and CSV comparison tables."""
    tables = load_reference_tables()
    results = [_cell(Variant.LB, 100, True), _cell(Variant.ALB, 50, False)]
    markdown = results_markdown(results, tables).splitlines()
    assert markdown[0].startswith("| n | FR | SR |")
    assert markdown[2] == (
        "| 100 | 0.2 | 0.95 | 100 | 85 | 50+ | 63 | 1.0000e-04 | 1.0700e-04 "
        "| 1.0000e-04 | 1.1100e-04 | 0.500 |"
    )

    rows = list(csv.DictReader(io.StringIO(results_csv(results, tables))))
    assert tuple(rows[0]) == CSV_FIELDS
    assert rows[0]["ref_iterations"] == "85"
    assert rows[0]["ratio"] == f"{100 / 85:.3f}"
    assert rows[1]["wall_ns"] == "NA"

    failed = results_markdown([_cell(Variant.LB, None, False)], tables)
    assert "| failed |" in failed

    markdown_path, csv_path = write_results(results, tmp_path)
    assert markdown_path.name == "table.md"
    assert csv_path.read_text(encoding="utf-8").startswith("name,table,row")


def test_repro_command(
    tmp_path: Path,
    monkeypatch: pytest.MonkeyPatch,
    capsys: pytest.CaptureFixture[str],
) -> None:
    """Test the repro-table1 command at a tiny scale."""
    monkeypatch.setenv(THREADS_ENV_VAR, "2")
    code = main(["repro-table1", "--scale", "0.02", "--max-iters", "20", "--out", str(tmp_path)])
    assert code == 0
    assert "| Matrix | Signal |" in capsys.readouterr().out
    assert (tmp_path / "table.csv").exists()


@pytest.mark.slow
def test_compressed_sensing_table(tmp_path: Path) -> None:
    """Test ALB against LB on every full-size compressed sensing row."""
    tables = load_reference_tables()["table1"]
    for spec in table1_specs(tmp_path)[::2]:
        lb = run_cell(spec)
        alb = run_cell(spec.copy(update={"variant": Variant.ALB}))
        entry = tables["rows"][spec.row]
        assert alb.converged
        assert alb.iterations is not None
        assert alb.iterations <= 500
        assert alb.rel_error is not None
        assert alb.rel_error <= 1e-4
        assert lb.iterations is not None
        assert alb.iterations <= lb.iterations / 3
        if parse_iterations(entry["lb_iters"])[1]:
            assert not lb.converged or lb.iterations > 1500


@pytest.mark.slow
def test_matrix_completion_table(tmp_path: Path) -> None:
    """Test ALB against LB on the completion rows up to n = 200."""
    specs = table2_specs(tmp_path, max_n=200)
    results = {(spec.n, spec.fr, spec.variant): run_cell(spec) for spec in specs}
    for (n, fr, variant), lb in results.items():
        if variant is not Variant.LB:
            continue
        alb = results[(n, fr, Variant.ALB)]
        assert alb.iterations is not None
        assert lb.iterations is not None
        assert alb.iterations < lb.iterations
    assert results[(200, 0.3, Variant.ALB)].iterations <= 600
    assert results[(200, 0.3, Variant.LB)].iterations >= 900


def test_cell_spec_names() -> None:
    """Test the file-system friendly names."""
    spec = CellSpec(
        table=1,
        row=3,
        variant=Variant.ALB,
        seed=0,
        out_dir=Path("out"),
        matrix=MatrixKind.BERNOULLI,
        signal=SignalKind.UNIFORM,
        n=2000,
        max_iters=5000,
    )
    assert spec.name == "t1-bernoulli-uniform-n2000-alb"
