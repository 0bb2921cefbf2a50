"""Exact Bregman iteration and the augmented Lagrangian method.

Both outer methods solve the same l1-regularized least squares subproblem

    min_x ||x||_1 - <c, x> + ||A x - b||^2 / 2

with c = p^k for Bregman and c = A^T lam^k for the augmented Lagrangian.
Since p^k = A^T lam^k along both runs, the two x-sequences coincide.
"""
from __future__ import annotations

import logging

import numpy as np

from pybregman.errors import BregmanInputError, InnerSolverError
from pybregman.linalg import RealVector, matvec, matvec_t
from pybregman.problems import BasisPursuitProblem
from pybregman.prox import shrink_vec

from .base import IterativeSolver
from .const import DEFAULT_INNER_MAX_ITERS, DEFAULT_INNER_TOL
from .models import AugLagState, LbPrimalState, Variant

_LOGGER = logging.getLogger(__name__)


def solve_l1_least_squares(
    problem: BasisPursuitProblem,
    linear: RealVector,
    start: RealVector,
    inner_tol: float = DEFAULT_INNER_TOL,
    max_iters: int = DEFAULT_INNER_MAX_ITERS,
) -> tuple[RealVector, int]:
    """Minimize ||x||_1 - <linear, x> + ||A x - b||^2 / 2 by proximal gradient.

    The step is 1 / ||A||^2 and the loop stops once the gradient-map norm
    ||x - x_next|| / step drops to inner_tol.

    Args:
    ----
        problem: BasisPursuitProblem
        linear: the linear term c
        start: warm start
        inner_tol: gradient-map tolerance, > 0
        max_iters: iteration cap

    Returns:
    -------
        (minimizer, iterations used)

    Raises:
    ------
        InnerSolverError: the cap was hit; carries the achieved gradient-map norm.
    """
    if inner_tol <= 0:
        raise BregmanInputError(f"inner_tol must be positive, got {inner_tol}")
    step = 1.0 / problem.norm_a_sq
    x = start
    achieved = float("inf")
    for iteration in range(1, max_iters + 1):
        gradient = matvec_t(problem.a, matvec(problem.a, x) - problem.b) - linear
        x_next = shrink_vec(x - step * gradient, step)
        achieved = float(np.linalg.norm(x - x_next)) / step
        x = x_next
        if achieved <= inner_tol:
            _LOGGER.debug("Inner solve reached %.3e after %d iterations", achieved, iteration)
            return x, iteration
    raise InnerSolverError(
        f"inner solver stopped at gradient-map norm {achieved:.3e} > {inner_tol:.1e}",
        achieved=achieved,
        iterations=max_iters,
    )


def initial_bregman_state(problem: BasisPursuitProblem) -> LbPrimalState:
    """Return x^0 = p^0 = 0."""
    n = problem.shape[1]
    return LbPrimalState(x=np.zeros(n), p=np.zeros(n))


def initial_auglag_state(problem: BasisPursuitProblem) -> AugLagState:
    """Return x^0 = 0, lam^0 = 0."""
    m, n = problem.shape
    return AugLagState(x=np.zeros(n), lam=np.zeros(m))


def bregman_exact_step(
    state: LbPrimalState,
    problem: BasisPursuitProblem,
    inner_tol: float = DEFAULT_INNER_TOL,
    max_inner_iters: int = DEFAULT_INNER_MAX_ITERS,
) -> LbPrimalState:
    """Take one exact Bregman step.

    x^{k+1} = argmin_x D^{p^k}(x, x^k) + ||A x - b||^2 / 2
    p^{k+1} = p^k - A^T(A x^{k+1} - b)
    """
    x, _ = solve_l1_least_squares(problem, state.p, state.x, inner_tol, max_inner_iters)
    p = state.p - matvec_t(problem.a, matvec(problem.a, x) - problem.b)
    return LbPrimalState(x=x, p=p, k=state.k + 1)


def auglag_step(
    state: AugLagState,
    problem: BasisPursuitProblem,
    inner_tol: float = DEFAULT_INNER_TOL,
    max_inner_iters: int = DEFAULT_INNER_MAX_ITERS,
) -> AugLagState:
    """Take one augmented Lagrangian step.

    x^{k+1} = argmin_x ||x||_1 - <lam^k, A x - b> + ||A x - b||^2 / 2
    lam^{k+1} = lam^k - (A x^{k+1} - b)
    """
    linear = matvec_t(problem.a, state.lam)
    x, _ = solve_l1_least_squares(problem, linear, state.x, inner_tol, max_inner_iters)
    lam = state.lam - (matvec(problem.a, x) - problem.b)
    return AugLagState(x=x, lam=lam, k=state.k + 1)


class BregmanSolver(IterativeSolver[LbPrimalState]):

    """Exact Bregman iteration with an inner proximal-gradient solve."""

    variant = Variant.BREGMAN

    def initial_state(self) -> LbPrimalState:
        """Return the starting state."""
        return initial_bregman_state(self.problem)

    def step(self, state: LbPrimalState) -> tuple[LbPrimalState, RealVector]:
        """Advance one outer iteration."""
        new = bregman_exact_step(
            state, self.problem, self.config.inner_tol, self.config.inner_max_iters
        )
        return new, new.x

    def primal(self, state: LbPrimalState) -> RealVector:
        """Return x."""
        return state.x


class AugLagSolver(IterativeSolver[AugLagState]):

    """Augmented Lagrangian method for basis pursuit."""

    variant = Variant.AUGLAG

    def initial_state(self) -> AugLagState:
        """Return the starting state."""
        return initial_auglag_state(self.problem)

    def step(self, state: AugLagState) -> tuple[AugLagState, RealVector]:
        """Advance one outer iteration."""
        new = auglag_step(state, self.problem, self.config.inner_tol, self.config.inner_max_iters)
        return new, new.x

    def primal(self, state: AugLagState) -> RealVector:
        """Return x."""
        return state.x
