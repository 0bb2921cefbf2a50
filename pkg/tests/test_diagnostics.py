"""Test metrics, stop rules, traces and the small helpers."""
from __future__ import annotations

import json
from pathlib import Path

import numpy as np
import pytest

from pybregman.diagnostics import (
    CSV_COLUMNS,
    NeverStop,
    ResidualStop,
    Trace,
    TraceRecord,
    TraceStatus,
    max_sequence_deviation,
    rel_error,
    relative_deviation,
    residual_rel_bp,
    residual_rel_mc,
    stopping_residual,
    write_plot_data,
)
from pybregman.errors import BregmanInputError
from pybregman.helpers import THREADS_ENV_VAR, atomic_write_text, get_max_workers
from pybregman.problems import BasisPursuitProblem, MatrixKind, SignalKind, gen_bp, gen_mc


@pytest.fixture(name="problem")
def fixture_problem() -> BasisPursuitProblem:
    """Return a 12 x 30 instance."""
    return gen_bp(MatrixKind.GAUSSIAN, SignalKind.GAUSSIAN, 30, 12, 3, seed=5)


@pytest.fixture(name="trace")
def fixture_trace() -> Trace:
    """Return a three-row trace with gaps."""
    trace = Trace(variant="alb", config={"mu": 5.0}, meta={"seed": 0})
    trace.append(TraceRecord(k=1, residual_rel=0.5, rel_error=0.9, g_mu=-1.25, wall_ns=10))
    trace.append(TraceRecord(k=2, residual_rel=0.1, rel_error=0.3, lagrangian=2.0, wall_ns=20))
    trace.append(TraceRecord(k=3, residual_rel=1e-6))
    trace.status = TraceStatus.CONVERGED
    return trace


def test_residual_examples(problem: BasisPursuitProblem) -> None:
    """Test the residual at the true signal and at zero."""
    assert problem.x_true is not None
    assert residual_rel_bp(problem.x_true, problem) <= 1e-14
    assert residual_rel_bp(np.zeros(30), problem) == pytest.approx(1.0)
    assert rel_error(2.0 * problem.x_true, problem.x_true) == pytest.approx(1.0)
    assert rel_error(problem.x_true, None) is None


def test_completion_residual() -> None:
    """Test the observed-entry residual."""
    problem = gen_mc(10, 1, 0.2, seed=1)
    assert problem.m_true is not None
    assert residual_rel_mc(problem.m_true, problem) <= 1e-14
    assert residual_rel_mc(np.zeros((10, 10)), problem) == pytest.approx(1.0)


def test_zero_data(problem: BasisPursuitProblem) -> None:
    """Test the undefined relative quantities and the absolute fallback."""
    zero = BasisPursuitProblem(a=problem.a, b=np.zeros(12))
    with pytest.raises(BregmanInputError):
        residual_rel_bp(np.zeros(30), zero)
    with pytest.raises(BregmanInputError):
        rel_error(np.ones(3), np.zeros(3))
    x = np.zeros(30)
    x[0] = 1.0
    assert stopping_residual(x, zero) == pytest.approx(np.linalg.norm(problem.a[:, 0]))


def test_stop_rules() -> None:
    """Test the strict residual comparison and the run-to-cap rule."""
    rule = ResidualStop(1e-5)
    assert rule.should_stop(9.99e-6)
    assert not rule.should_stop(1e-5)
    assert not NeverStop().should_stop(0.0)
    assert repr(rule) == "ResidualStop(1e-05)"
    for tol in (0.0, 1.0, -1e-3):
        with pytest.raises(BregmanInputError):
            ResidualStop(tol)


def test_trace_properties(trace: Trace) -> None:
    """Test the derived accessors."""
    assert trace.iterations == 3
    assert trace.converged
    assert trace.last == TraceRecord(k=3, residual_rel=1e-6)
    assert trace.column("k") == [1, 2, 3]
    assert trace.column("g_mu") == [-1.25, None, None]
    with pytest.raises(BregmanInputError):
        trace.column("x")


def test_trace_append_rejects(trace: Trace) -> None:
    """Test the row ordering and residual sign checks."""
    with pytest.raises(BregmanInputError):
        trace.append(TraceRecord(k=3, residual_rel=0.1))
    with pytest.raises(BregmanInputError):
        trace.append(TraceRecord(k=4, residual_rel=-0.1))
    assert trace.iterations == 3


def test_trace_csv(trace: Trace, tmp_path: Path) -> None:
    """Test the CSV text and its parse."""
    text = trace.to_csv()
    lines = text.splitlines()
    assert lines[0] == ",".join(CSV_COLUMNS)
    assert lines[1] == "1,0.5,0.9,-1.25,NA,10"
    assert lines[3] == "3,1e-06,NA,NA,NA,NA"

    path = trace.write_csv(tmp_path / "out" / "trace.csv")
    assert path.read_text(encoding="utf-8") == text
    parsed = Trace.from_csv(path, TraceStatus.CONVERGED)
    assert parsed.records == trace.records
    assert parsed.converged


def test_trace_csv_bad_header(tmp_path: Path) -> None:
    """Test that a foreign CSV is refused."""
    path = tmp_path / "other.csv"
    path.write_text("a,b\n1,2\n", encoding="utf-8")
    with pytest.raises(BregmanInputError):
        Trace.from_csv(path)


def test_trace_summary(trace: Trace, tmp_path: Path) -> None:
    """Test the summary fields and the JSON file."""
    summary = trace.summary()
    assert summary.status is TraceStatus.CONVERGED
    assert summary.iterations == 3
    assert summary.residual_rel == 1e-6
    assert summary.rel_error is None
    assert summary.wall_ns is None

    decoded = json.loads(trace.write_summary(tmp_path / "summary.json").read_text())
    assert decoded["status"] == "converged"
    assert decoded["variant"] == "alb"
    assert decoded["meta"] == {"seed": 0}
    assert list(decoded) == sorted(decoded)

    empty = Trace().summary()
    assert empty.iterations == 0
    assert empty.status is TraceStatus.ITER_CAP
    assert empty.residual_rel is None


def test_plot_data(trace: Trace, tmp_path: Path) -> None:
    """Test the two-column plot files."""
    residual, error = write_plot_data(trace, tmp_path)
    assert residual.read_text().splitlines() == ["1 0.5", "2 0.1", "3 1e-06"]
    assert error.read_text().splitlines() == ["1 0.9", "2 0.3"]

    bare = Trace(records=[TraceRecord(k=1, residual_rel=0.2)])
    assert len(write_plot_data(bare, tmp_path / "bare")) == 1


def test_atomic_write_leaves_no_temporaries(tmp_path: Path) -> None:
    """Test the replace-on-write helper."""
    target = atomic_write_text(tmp_path / "nested" / "file.txt", "first")
    atomic_write_text(target, "second")
    assert target.read_text() == "second"
    assert [p.name for p in target.parent.iterdir()] == ["file.txt"]


@pytest.mark.parametrize(
    ("raw", "expected"),
    [(None, 3), ("", 3), ("8", 8), ("0", 1), ("many", 3)],
)
def test_get_max_workers(monkeypatch: pytest.MonkeyPatch, raw: str | None, expected: int) -> None:
    """Test the worker count read from the environment."""
    if raw is None:
        monkeypatch.delenv(THREADS_ENV_VAR, raising=False)
    else:
        monkeypatch.setenv(THREADS_ENV_VAR, raw)
    assert get_max_workers(default=3) == expected


def test_relative_deviation() -> None:
    """Test the scale-free deviation and its zero floor."""
    assert relative_deviation(np.zeros(3), np.zeros(3)) == 0.0
    assert relative_deviation(np.array([1.0, 0.0]), np.array([0.0, 0.0])) == 1.0
    assert relative_deviation(np.array([2.0]), np.array([1.0])) == pytest.approx(0.5)
    assert max_sequence_deviation([], []) == 0.0
    with pytest.raises(ValueError):
        max_sequence_deviation([np.zeros(1)], [])


@pytest.mark.parametrize("k", [0, 2])
def test_trace_starts_at_one(k: int) -> None:
    """Test that the first row of a trace is iteration 1."""
    with pytest.raises(BregmanInputError, match="start at k=1"):
        Trace().append(TraceRecord(k=k, residual_rel=0.5))
