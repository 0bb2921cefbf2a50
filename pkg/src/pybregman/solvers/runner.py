"""Drive any solver variant and record its trace."""
from __future__ import annotations

import logging
import time
from typing import Any

import numpy as np

from pybregman.diagnostics.metrics import ground_truth, rel_error, stopping_residual
from pybregman.diagnostics.stop import ResidualStop, StopRule
from pybregman.diagnostics.trace import Trace, TraceRecord, TraceStatus
from pybregman.errors import BregmanInputError, SolverMismatchError
from pybregman.linalg import RealVector
from pybregman.problems import (
    BasisPursuitProblem,
    MatrixCompletionProblem,
    dual_objective,
    lagrangian,
    meta_dict,
)
from pybregman.prox import ObjectiveKind

from .base import IterativeSolver
from .basis_pursuit import (
    AlbDualSolver,
    AlbPrimalSolver,
    AlbVSolver,
    LbDualSolver,
    LbPrimalSolver,
    LbVSolver,
)
from .bregman import AugLagSolver, BregmanSolver
from .completion import McAlbSolver, McDualSolver, McLbSolver
from .const import (
    CS_MAX_ITERS,
    CS_MU,
    CS_RESIDUAL_TOL,
    MC_MAX_ITERS,
    MC_MU_PER_DIM,
    MC_RESIDUAL_TOL,
)
from .models import McShrinkArg, ScheduleKind, SolverConfig, Variant
from .schedule import TauRule, default_tau

_LOGGER = logging.getLogger(__name__)

Problem = BasisPursuitProblem | MatrixCompletionProblem

BP_SOLVERS: dict[Variant, type[IterativeSolver[Any]]] = {
    Variant.LB: LbVSolver,
    Variant.ALB: AlbVSolver,
    Variant.LB_PRIMAL: LbPrimalSolver,
    Variant.LB_DUAL: LbDualSolver,
    Variant.ALB_PRIMAL: AlbPrimalSolver,
    Variant.ALB_DUAL: AlbDualSolver,
    Variant.BREGMAN: BregmanSolver,
    Variant.AUGLAG: AugLagSolver,
}


def make_solver(problem: Problem, config: SolverConfig, variant: Variant) -> IterativeSolver[Any]:
    """Return the solver implementing a variant for a problem.

    Raises
    ------
        SolverMismatchError: no such variant for this problem or objective.
    """
    variant = Variant(variant)
    if isinstance(problem, MatrixCompletionProblem):
        if variant in (Variant.LB, Variant.LB_PRIMAL):
            return McLbSolver(problem, config)
        if variant in (Variant.ALB, Variant.ALB_PRIMAL):
            return McAlbSolver(problem, config)
        if variant in (Variant.LB_DUAL, Variant.ALB_DUAL):
            return McDualSolver(problem, config, accelerated=variant.accelerated)
        raise SolverMismatchError(f"variant {variant.value} does not solve matrix completion")
    return BP_SOLVERS[variant](problem, config)


def make_config(
    problem: Problem,
    *,
    mu: float | None = None,
    tau: float | None = None,
    tau_rule: TauRule | None = None,
    max_iters: int | None = None,
    residual_tol: float | None = None,
    schedule: ScheduleKind | None = None,
    objective: ObjectiveKind | None = None,
    mc_shrink_arg: McShrinkArg = McShrinkArg.TILDE,
    **extra: Any,
) -> SolverConfig:
    """Build a SolverConfig with the experimental defaults of the problem type.

    Basis pursuit defaults to mu = 5, tau = 2 / (mu ||A||^2), tol 1e-5 and
    5000 iterations; matrix completion to mu = 5 n, tau = 1 / mu, tol 1e-4 and
    2000 iterations. An explicit tau wins over tau_rule.

    Args:
    ----
        problem: BasisPursuitProblem or MatrixCompletionProblem
        mu: regularization parameter
        tau: explicit step length
        tau_rule: rule deriving tau from mu and ||A||^2
        max_iters: iteration cap
        residual_tol: stopping tolerance
        schedule: ScheduleKind
        objective: ObjectiveKind
        mc_shrink_arg: McShrinkArg
        extra: further SolverConfig fields

    Returns:
    -------
        SolverConfig
    """
    if isinstance(problem, MatrixCompletionProblem):
        mu = MC_MU_PER_DIM * problem.n if mu is None else mu
        default_rule, norm_sq = TauRule.PAPER_MC, 1.0
        defaults = (MC_MAX_ITERS, MC_RESIDUAL_TOL, ObjectiveKind.NUCLEAR)
    else:
        mu = CS_MU if mu is None else mu
        default_rule, norm_sq = TauRule.PAPER_CS, problem.norm_a_sq
        defaults = (CS_MAX_ITERS, CS_RESIDUAL_TOL, ObjectiveKind.L1)

    if mu <= 0:
        raise BregmanInputError(f"mu must be positive, got {mu}")
    if tau is None:
        tau_rule = default_rule if tau_rule is None else TauRule(tau_rule)
        tau = default_tau(tau_rule, mu, norm_sq)
    else:
        tau_rule = None

    return SolverConfig(
        mu=mu,
        tau=tau,
        max_iters=defaults[0] if max_iters is None else max_iters,
        residual_tol=defaults[1] if residual_tol is None else residual_tol,
        schedule=schedule or ScheduleKind(),
        objective=defaults[2] if objective is None else objective,
        tau_rule=tau_rule,
        mc_shrink_arg=mc_shrink_arg,
        **extra,
    )


def run(
    problem: Problem,
    config: SolverConfig,
    variant: Variant = Variant.ALB,
    stop_rule: StopRule | None = None,
    *,
    max_iters: int | None = None,
    record_time: bool = True,
) -> Trace:
    """Iterate a solver variant until the stop rule fires or the cap is hit.

    Args:
    ----
        problem: BasisPursuitProblem or MatrixCompletionProblem
        config: SolverConfig
        variant: Variant
        stop_rule: defaults to ResidualStop(config.residual_tol)
        max_iters: overrides config.max_iters; 0 gives an empty trace
        record_time: record wall-clock nanoseconds per row

    Returns:
    -------
        Trace with one record per iteration.

    Raises:
    ------
        SolverMismatchError: the variant does not fit the problem or objective.
    """
    solver = make_solver(problem, config, variant)
    stop = stop_rule if stop_rule is not None else ResidualStop(config.residual_tol)
    cap = config.max_iters if max_iters is None else max_iters
    if cap < 0:
        raise BregmanInputError(f"max_iters must be >= 0, got {cap}")

    track_dual = config.record_dual and ObjectiveKind(config.objective).is_vector
    truth = ground_truth(problem)
    state = solver.initial_state()
    y_start = solver.dual(state)
    trace = Trace(
        variant=Variant(variant).value,
        config=config.snapshot(),
        meta=meta_dict(problem),
        y0=y_start if track_dual else None,
    )

    _LOGGER.info("Running %s for at most %d iterations", solver, cap)
    started = time.perf_counter_ns()
    for previous, current, iterate in solver.iterate(cap, state):
        residual = stopping_residual(iterate, problem)
        g_mu = value = None
        y_prev, y_new = solver.dual(previous), solver.dual(current)
        if track_dual and y_new is not None and y_prev is not None:
            g_mu, _ = dual_objective(y_new, problem, config.mu, config.objective)
            value = lagrangian(iterate, y_prev, problem, config.mu, config.objective)
        trace.append(
            TraceRecord(
                k=current.k,
                residual_rel=residual,
                rel_error=rel_error(iterate, truth),
                g_mu=g_mu,
                lagrangian=value,
                wall_ns=time.perf_counter_ns() - started if record_time else None,
            )
        )
        trace.solution = iterate
        if _LOGGER.isEnabledFor(logging.DEBUG):
            _LOGGER.debug("k=%d residual=%.3e", current.k, residual)
        if stop.should_stop(residual):
            trace.status = TraceStatus.CONVERGED
            break

    if trace.solution is None:
        trace.solution = np.asarray(solver.primal(state))
    _LOGGER.info(
        "%s finished: %s after %d iterations", solver, trace.status.value, trace.iterations
    )
    return trace


def primal_sequence(
    problem: BasisPursuitProblem,
    config: SolverConfig,
    variant: Variant,
    iterations: int,
) -> list[RealVector]:
    """Return the primal iterates x^1..x^iterations of a variant."""
    solver = make_solver(problem, config, variant)
    return [iterate for _, _, iterate in solver.iterate(iterations)]
