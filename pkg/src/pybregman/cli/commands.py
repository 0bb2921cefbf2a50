"""Command implementations behind the pybregman console script."""
from __future__ import annotations

import asyncio
import logging
import sys

from pybregman.diagnostics import write_plot_data
from pybregman.errors import BregmanInputError, SolverMismatchError
from pybregman.helpers import atomic_write_text
from pybregman.problems import (
    BasisPursuitProblem,
    MatrixCompletionProblem,
    Problem,
    default_bp_dims,
    gen_bp,
    gen_mc,
    instance_digest,
    load_instance,
    save_instance,
)
from pybregman.solvers import ScheduleKind, make_config, run

from . import const
from .models import ExperimentConfig
from .repro import run_grid, table1_specs, table2_specs, write_results
from .verify import run_suites

_LOGGER = logging.getLogger(__name__)


def generate(config: ExperimentConfig, kind: str) -> Problem:
    """Generate the instance described by the instance flags.

    Raises
    ------
        BregmanInputError: --n is missing or the dimensions are invalid.
    """
    if config.n is None:
        raise BregmanInputError("--n is required to generate an instance")
    if kind == "mc":
        return gen_mc(config.n, config.rank, config.fr, config.seed)
    n, m, s = default_bp_dims(config.n)
    return gen_bp(
        config.matrix,
        config.signal,
        n,
        config.m or m,
        config.s or s,
        config.seed,
    )


def cmd_gen(config: ExperimentConfig) -> int:
    """Write an instance file and print its digest."""
    if config.problem is None:
        raise BregmanInputError("gen needs the problem kind: bp or mc")
    problem = generate(config, config.problem)
    save_instance(problem, config.out / const.INSTANCE_FILE, mu=config.mu)
    print(instance_digest(problem))
    return const.EXIT_CONVERGED


def _load_problem(config: ExperimentConfig, kind: str) -> tuple[Problem, float | None]:
    if config.instance is None:
        return generate(config, kind), None
    problem, recorded_mu = load_instance(config.instance)
    expected = BasisPursuitProblem if kind == "bp" else MatrixCompletionProblem
    if not isinstance(problem, expected):
        raise SolverMismatchError(f"{config.instance} does not hold a {kind} instance")
    return problem, recorded_mu


def cmd_solve(config: ExperimentConfig, kind: str) -> int:
    """Solve an instance and write trace.csv, summary.json and the plot data.

    Returns
    -------
        0 when the run converged, 2 when it hit the iteration cap.
    """
    problem, recorded_mu = _load_problem(config, kind)
    solver_config = make_config(
        problem,
        mu=config.mu if config.mu is not None else recorded_mu,
        tau=config.tau,
        tau_rule=config.tau_rule,
        max_iters=config.max_iters,
        residual_tol=config.tol,
        schedule=ScheduleKind.parse_spec(config.schedule),
        objective=config.objective,
        mc_shrink_arg=config.mc_shrink_arg,
    )
    trace = run(problem, solver_config, config.variant, record_time=config.record_time)

    trace.write_csv(config.out / const.TRACE_FILE)
    trace.write_summary(config.out / const.SUMMARY_FILE)
    write_plot_data(trace, config.out)

    last = trace.last
    print(
        f"{trace.status.value} after {trace.iterations} iterations"
        f" residual={None if last is None else last.residual_rel!r}"
        f" rel_error={None if last is None else last.rel_error!r}"
    )
    return const.EXIT_CONVERGED if trace.converged else const.EXIT_ITER_CAP


def cmd_verify(config: ExperimentConfig) -> int:
    """Run the verify suites and report every property."""
    report = run_suites(config.suite)
    text = report.json(indent=2) + "\n"
    atomic_write_text(config.out / const.REPORT_FILE, text)
    print(text, end="")
    if report.passed:
        return const.EXIT_CONVERGED
    for failure in report.failures:
        print(
            f"FAILED {failure.suite}/{failure.name}: {failure.measured!r} > {failure.threshold!r}",
            file=sys.stderr,
        )
    return const.EXIT_ERROR


def cmd_repro(config: ExperimentConfig, table: int) -> int:
    """Run a reproduction grid and write the comparison tables."""
    if table == 1:
        specs = table1_specs(config.out, config.scale, config.seed, config.max_iters)
    else:
        specs = table2_specs(
            config.out,
            config.scale,
            config.max_n or const.TABLE2_MAX_N,
            config.seed,
            config.max_iters,
        )
    results = asyncio.run(run_grid(specs))
    markdown, _ = write_results(results, config.out)
    print(markdown.read_text(encoding="utf-8"), end="")
    failed = [result.name for result in results if result.error is not None]
    if failed:
        _LOGGER.warning("%d cells failed: %s", len(failed), ", ".join(failed))
    return const.EXIT_CONVERGED
