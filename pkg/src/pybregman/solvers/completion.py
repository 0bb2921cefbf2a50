"""Linearized Bregman methods for nuclear norm matrix completion."""
from __future__ import annotations

import numpy as np

from pybregman.errors import SolverMismatchError
from pybregman.linalg import DenseMatrix
from pybregman.problems import MatrixCompletionProblem
from pybregman.prox import ObjectiveKind, shrink_matrix

from .base import IterativeSolver
from .models import McDualState, McShrinkArg, McState, ScheduleKind, SolverConfig, Variant

NO_EXTRAPOLATION = ScheduleKind(tag="constant", alpha=1.0)


def _require_nuclear(config: SolverConfig) -> None:
    if config.objective is not ObjectiveKind.NUCLEAR:
        raise SolverMismatchError(
            f"matrix completion needs the nuclear objective, not {config.objective.value}"
        )


def _residual(problem: MatrixCompletionProblem, x: DenseMatrix) -> DenseMatrix:
    """Return P_omega(x) - P_omega(M)."""
    return problem.project(x) - problem.observed_matrix


def initial_mc_state(problem: MatrixCompletionProblem) -> McState:
    """Return X^0 = P^0 = X~^0 = P~^0 = 0."""
    shape = (problem.n, problem.n)
    return McState(
        x=np.zeros(shape),
        p=np.zeros(shape),
        x_tilde=np.zeros(shape),
        p_tilde=np.zeros(shape),
    )


def initial_mc_dual_state(problem: MatrixCompletionProblem, config: SolverConfig) -> McDualState:
    """Return Y^0 = Y~^0 = tau P_omega(M)."""
    y0 = config.tau * problem.observed_matrix
    return McDualState(y=y0, y_tilde=y0.copy())


def mc_lb_step(state: McState, problem: MatrixCompletionProblem, config: SolverConfig) -> McState:
    """Take one linearized Bregman step for matrix completion.

    X^{k+1} = Shrink(X^k - mu (tau (P X^k - P M) - P^k), mu)
    P^{k+1} = P^k - tau (P X^k - P M) - (X^{k+1} - X^k) / mu

    Args:
    ----
        state: McState
        problem: MatrixCompletionProblem
        config: SolverConfig with the nuclear objective

    Returns:
    -------
        McState whose tilde fields mirror X and P.

    Raises:
    ------
        BregmanNumericalError: the SVD failed.
    """
    _require_nuclear(config)
    mu, tau = config.mu, config.tau
    residual = _residual(problem, state.x)
    x = shrink_matrix(state.x - mu * (tau * residual - state.p), mu)
    p = state.p - tau * residual - (x - state.x) / mu
    return McState(x=x, p=p, x_tilde=x, p_tilde=p, k=state.k + 1)


def mc_alb_step(state: McState, problem: MatrixCompletionProblem, config: SolverConfig) -> McState:
    """Take one accelerated linearized Bregman step for matrix completion.

    With mc_shrink_arg "tilde" the shrink argument is built from (X~^k, P~^k)
    as in the vector method. "as-printed" builds it from (X^k, P^k) and lets
    the tilde quantities enter through the P update only.

    Raises
    ------
        BregmanNumericalError: the SVD failed.
    """
    _require_nuclear(config)
    mu, tau = config.mu, config.tau
    alpha_k = config.schedule.alpha_at(state.k)
    residual = _residual(problem, state.x_tilde)
    if config.mc_shrink_arg is McShrinkArg.TILDE:
        x = shrink_matrix(state.x_tilde - mu * (tau * residual - state.p_tilde), mu)
    else:
        x = shrink_matrix(state.x - mu * (tau * _residual(problem, state.x) - state.p), mu)
    p = state.p_tilde - tau * residual - (x - state.x_tilde) / mu
    return McState(
        x=x,
        p=p,
        x_tilde=alpha_k * x + (1.0 - alpha_k) * state.x,
        p_tilde=alpha_k * p + (1.0 - alpha_k) * state.p,
        k=state.k + 1,
    )


def mc_dual_step(
    state: McDualState,
    problem: MatrixCompletionProblem,
    config: SolverConfig,
) -> tuple[McDualState, DenseMatrix]:
    """Take one (accelerated) dual gradient step for matrix completion.

    W^{k+1} = Shrink(mu Y~^k, mu)
    Y^{k+1} = Y~^k - tau (P W^{k+1} - P M)
    Y~^{k+1} = alpha_k Y^{k+1} + (1 - alpha_k) Y^k

    Returns
    -------
        (new state, W^{k+1})
    """
    _require_nuclear(config)
    alpha_k = config.schedule.alpha_at(state.k)
    w = shrink_matrix(config.mu * state.y_tilde, config.mu)
    y = state.y_tilde - config.tau * _residual(problem, w)
    y_tilde = alpha_k * y + (1.0 - alpha_k) * state.y
    return McDualState(y=y, y_tilde=y_tilde, w=w, k=state.k + 1), w


class McLbSolver(IterativeSolver[McState]):

    """Linearized Bregman for matrix completion."""

    variant = Variant.LB
    problem_type = MatrixCompletionProblem
    objectives = (ObjectiveKind.NUCLEAR,)

    def initial_state(self) -> McState:
        """Return the starting state."""
        return initial_mc_state(self.problem)

    def step(self, state: McState) -> tuple[McState, DenseMatrix]:
        """Advance one iteration."""
        new = mc_lb_step(state, self.problem, self.config)
        return new, new.x

    def primal(self, state: McState) -> DenseMatrix:
        """Return X."""
        return state.x


class McAlbSolver(McLbSolver):

    """Accelerated linearized Bregman for matrix completion."""

    variant = Variant.ALB

    def step(self, state: McState) -> tuple[McState, DenseMatrix]:
        """Advance one iteration."""
        new = mc_alb_step(state, self.problem, self.config)
        return new, new.x


class McDualSolver(IterativeSolver[McDualState]):

    """Dual form of the completion methods; plain unless accelerated is set."""

    variant = Variant.ALB_DUAL
    problem_type = MatrixCompletionProblem
    objectives = (ObjectiveKind.NUCLEAR,)

    def __init__(
        self,
        problem: MatrixCompletionProblem,
        config: SolverConfig,
        *,
        accelerated: bool = True,
    ) -> None:
        """Bind the solver; without acceleration the schedule is fixed to alpha = 1."""
        if not accelerated:
            config = config.copy(update={"schedule": NO_EXTRAPOLATION})
        super().__init__(problem, config)
        self.accelerated = accelerated

    def initial_state(self) -> McDualState:
        """Return the starting state."""
        return initial_mc_dual_state(self.problem, self.config)

    def step(self, state: McDualState) -> tuple[McDualState, DenseMatrix]:
        """Advance one iteration."""
        return mc_dual_step(state, self.problem, self.config)

    def primal(self, state: McDualState) -> DenseMatrix:
        """Return W^k, zero before the first step."""
        n = self.problem.n
        return np.zeros((n, n)) if state.w is None else state.w

    def dual(self, state: McDualState) -> DenseMatrix:
        """Return Y."""
        return state.y
