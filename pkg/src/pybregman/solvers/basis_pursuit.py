"""Linearized Bregman and its accelerated form for basis pursuit.

Each method comes in three algebraically equivalent forms: the primal
iteration on (x, p), gradient descent on the dual variable y, and the
v-form on v = A^T y.
"""
from __future__ import annotations

import numpy as np

from pybregman.errors import SolverMismatchError
from pybregman.linalg import RealVector, matvec, matvec_t
from pybregman.problems import BasisPursuitProblem
from pybregman.prox import ObjectiveKind, prox_objective, shrink_vec

from .base import IterativeSolver
from .models import (
    AccelDualState,
    AlbState,
    AlbVState,
    DualState,
    LbPrimalState,
    SolverConfig,
    Variant,
    VState,
)

VECTOR_OBJECTIVES = (ObjectiveKind.L1, ObjectiveKind.L1_NONNEG)


def _require_l1(config: SolverConfig) -> None:
    if config.objective is not ObjectiveKind.L1:
        raise SolverMismatchError(
            f"the primal form has a closed form for l1 only, not {config.objective.value}"
        )


def _require_vector(config: SolverConfig) -> None:
    if config.objective not in VECTOR_OBJECTIVES:
        raise SolverMismatchError(f"objective {config.objective.value} is not a vector objective")


def _residual(problem: BasisPursuitProblem, x: RealVector) -> RealVector:
    return matvec(problem.a, x) - problem.b


def _extrapolate(alpha_k: float, new: RealVector, old: RealVector) -> RealVector:
    return alpha_k * new + (1.0 - alpha_k) * old


def _last_primal(problem: BasisPursuitProblem, w: RealVector | None) -> RealVector:
    return np.zeros(problem.shape[1]) if w is None else w


def initial_lb_primal_state(problem: BasisPursuitProblem) -> LbPrimalState:
    """Return x^0 = p^0 = 0."""
    n = problem.shape[1]
    return LbPrimalState(x=np.zeros(n), p=np.zeros(n))


def initial_dual_state(problem: BasisPursuitProblem, config: SolverConfig) -> DualState:
    """Return y^0 = tau b."""
    return DualState(y=config.tau * problem.b)


def initial_vstate(problem: BasisPursuitProblem, config: SolverConfig) -> VState:
    """Return v^0 = tau A^T b."""
    return VState(v=config.tau * matvec_t(problem.a, problem.b))


def initial_alb_state(problem: BasisPursuitProblem) -> AlbState:
    """Return x^0 = x~^0 = p^0 = p~^0 = 0."""
    n = problem.shape[1]
    return AlbState(x=np.zeros(n), p=np.zeros(n), x_tilde=np.zeros(n), p_tilde=np.zeros(n))


def initial_accel_dual_state(problem: BasisPursuitProblem, config: SolverConfig) -> AccelDualState:
    """Return y^0 = y~^0 = tau b."""
    y0 = config.tau * problem.b
    return AccelDualState(y=y0, y_tilde=y0.copy())


def initial_alb_vstate(problem: BasisPursuitProblem, config: SolverConfig) -> AlbVState:
    """Return v^0 = v~^0 = tau A^T b."""
    v0 = config.tau * matvec_t(problem.a, problem.b)
    return AlbVState(v=v0, v_tilde=v0.copy())


def lb_step_primal(
    state: LbPrimalState,
    problem: BasisPursuitProblem,
    config: SolverConfig,
) -> LbPrimalState:
    """Take one primal linearized Bregman step.

    x^{k+1} = mu shrink(p^k - tau A^T(A x^k - b) + x^k / mu, 1)
    p^{k+1} = p^k - tau A^T(A x^k - b) - (x^{k+1} - x^k) / mu

    Args:
    ----
        state: LbPrimalState
        problem: BasisPursuitProblem
        config: SolverConfig with the l1 objective

    Returns:
    -------
        LbPrimalState
    """
    _require_l1(config)
    mu = config.mu
    gradient = config.tau * matvec_t(problem.a, _residual(problem, state.x))
    x = mu * shrink_vec(state.p - gradient + state.x / mu, 1.0)
    p = state.p - gradient - (x - state.x) / mu
    return LbPrimalState(x=x, p=p, k=state.k + 1)


def dual_gd_step(
    state: DualState,
    problem: BasisPursuitProblem,
    config: SolverConfig,
) -> tuple[DualState, RealVector]:
    """Take one gradient step on the dual objective.

    w^{k+1} = argmin_w J(w) + ||w||^2 / (2 mu) - <y^k, A w - b>
    y^{k+1} = y^k - tau (A w^{k+1} - b)

    Returns
    -------
        (new state, w^{k+1})
    """
    _require_vector(config)
    w = prox_objective(config.objective, matvec_t(problem.a, state.y), config.mu)
    y = state.y - config.tau * _residual(problem, w)
    return DualState(y=y, w=w, k=state.k + 1), w


def lb_step_vform(
    state: VState,
    problem: BasisPursuitProblem,
    config: SolverConfig,
) -> tuple[VState, RealVector]:
    """Take one v-form step: w = prox(v), v <- v - tau A^T(A w - b)."""
    _require_vector(config)
    w = prox_objective(config.objective, state.v, config.mu)
    v = state.v - config.tau * matvec_t(problem.a, _residual(problem, w))
    return VState(v=v, w=w, k=state.k + 1), w


def alb_step_primal(
    state: AlbState,
    problem: BasisPursuitProblem,
    config: SolverConfig,
) -> AlbState:
    """Take one primal accelerated linearized Bregman step.

    The shrink and subgradient updates start from the extrapolated pair
    (x~^k, p~^k); the new extrapolation uses alpha_k from the schedule.

    Args:
    ----
        state: AlbState
        problem: BasisPursuitProblem
        config: SolverConfig with the l1 objective

    Returns:
    -------
        AlbState
    """
    _require_l1(config)
    mu = config.mu
    alpha_k = config.schedule.alpha_at(state.k)
    gradient = config.tau * matvec_t(problem.a, _residual(problem, state.x_tilde))
    x = mu * shrink_vec(state.p_tilde - gradient + state.x_tilde / mu, 1.0)
    p = state.p_tilde - gradient - (x - state.x_tilde) / mu
    return AlbState(
        x=x,
        p=p,
        x_tilde=_extrapolate(alpha_k, x, state.x),
        p_tilde=_extrapolate(alpha_k, p, state.p),
        k=state.k + 1,
    )


def accel_dual_step(
    state: AccelDualState,
    problem: BasisPursuitProblem,
    config: SolverConfig,
) -> tuple[AccelDualState, RealVector]:
    """Take one accelerated dual gradient step from the extrapolated point y~^k.

    Returns
    -------
        (new state, w^{k+1})
    """
    _require_vector(config)
    alpha_k = config.schedule.alpha_at(state.k)
    w = prox_objective(config.objective, matvec_t(problem.a, state.y_tilde), config.mu)
    y = state.y_tilde - config.tau * _residual(problem, w)
    new = AccelDualState(y=y, y_tilde=_extrapolate(alpha_k, y, state.y), w=w, k=state.k + 1)
    return new, w


def alb_step_vform(
    state: AlbVState,
    problem: BasisPursuitProblem,
    config: SolverConfig,
) -> tuple[AlbVState, RealVector]:
    """Take one accelerated v-form step.

    For l1 this is the three-line method
    w = mu shrink(v~, 1); v <- v~ - tau A^T(A w - b); v~ <- alpha v_new + (1 - alpha) v_old.
    """
    _require_vector(config)
    alpha_k = config.schedule.alpha_at(state.k)
    w = prox_objective(config.objective, state.v_tilde, config.mu)
    v = state.v_tilde - config.tau * matvec_t(problem.a, _residual(problem, w))
    new = AlbVState(v=v, v_tilde=_extrapolate(alpha_k, v, state.v), w=w, k=state.k + 1)
    return new, w


def dual_consistency_gap(
    primal: LbPrimalState,
    dual: DualState,
    problem: BasisPursuitProblem,
    config: SolverConfig,
) -> float:
    """Return ||A^T y^k - (p^k - tau A^T(A x^k - b) + x^k / mu)|| relative to ||A^T y^k||.

    Zero exactly when the primal and dual linearized Bregman runs produce the
    same next iterate.
    """
    target = matvec_t(problem.a, dual.y)
    gradient = config.tau * matvec_t(problem.a, _residual(problem, primal.x))
    candidate = primal.p - gradient + primal.x / config.mu
    scale = max(float(np.linalg.norm(target)), 1e-300)
    return float(np.linalg.norm(target - candidate)) / scale


class LbPrimalSolver(IterativeSolver[LbPrimalState]):

    """Linearized Bregman on (x, p)."""

    variant = Variant.LB_PRIMAL

    def initial_state(self) -> LbPrimalState:
        """Return the starting state."""
        return initial_lb_primal_state(self.problem)

    def step(self, state: LbPrimalState) -> tuple[LbPrimalState, RealVector]:
        """Advance one iteration."""
        new = lb_step_primal(state, self.problem, self.config)
        return new, new.x

    def primal(self, state: LbPrimalState) -> RealVector:
        """Return the primal point of a state."""
        return state.x


class LbDualSolver(IterativeSolver[DualState]):

    """Linearized Bregman as dual gradient descent."""

    variant = Variant.LB_DUAL
    objectives = VECTOR_OBJECTIVES

    def initial_state(self) -> DualState:
        """Return the starting state."""
        return initial_dual_state(self.problem, self.config)

    def step(self, state: DualState) -> tuple[DualState, RealVector]:
        """Advance one iteration."""
        return dual_gd_step(state, self.problem, self.config)

    def primal(self, state: DualState) -> RealVector:
        """Return w^k, zero before the first step."""
        return _last_primal(self.problem, state.w)

    def dual(self, state: DualState) -> RealVector:
        """Return y."""
        return state.y


class LbVSolver(IterativeSolver[VState]):

    """Linearized Bregman in the v-form."""

    variant = Variant.LB
    objectives = VECTOR_OBJECTIVES

    def initial_state(self) -> VState:
        """Return the starting state."""
        return initial_vstate(self.problem, self.config)

    def step(self, state: VState) -> tuple[VState, RealVector]:
        """Advance one iteration."""
        return lb_step_vform(state, self.problem, self.config)

    def primal(self, state: VState) -> RealVector:
        """Return w^k, zero before the first step."""
        return _last_primal(self.problem, state.w)


class AlbPrimalSolver(IterativeSolver[AlbState]):

    """Accelerated linearized Bregman on (x, p, x~, p~)."""

    variant = Variant.ALB_PRIMAL

    def initial_state(self) -> AlbState:
        """Return the starting state."""
        return initial_alb_state(self.problem)

    def step(self, state: AlbState) -> tuple[AlbState, RealVector]:
        """Advance one iteration."""
        new = alb_step_primal(state, self.problem, self.config)
        return new, new.x

    def primal(self, state: AlbState) -> RealVector:
        """Return the primal point of a state."""
        return state.x


class AlbDualSolver(IterativeSolver[AccelDualState]):

    """Accelerated dual gradient descent."""

    variant = Variant.ALB_DUAL
    objectives = VECTOR_OBJECTIVES

    def initial_state(self) -> AccelDualState:
        """Return the starting state."""
        return initial_accel_dual_state(self.problem, self.config)

    def step(self, state: AccelDualState) -> tuple[AccelDualState, RealVector]:
        """Advance one iteration."""
        return accel_dual_step(state, self.problem, self.config)

    def primal(self, state: AccelDualState) -> RealVector:
        """Return w^k, zero before the first step."""
        return _last_primal(self.problem, state.w)

    def dual(self, state: AccelDualState) -> RealVector:
        """Return y."""
        return state.y


class AlbVSolver(IterativeSolver[AlbVState]):

    """Accelerated linearized Bregman in the v-form."""

    variant = Variant.ALB
    objectives = VECTOR_OBJECTIVES

    def initial_state(self) -> AlbVState:
        """Return the starting state."""
        return initial_alb_vstate(self.problem, self.config)

    def step(self, state: AlbVState) -> tuple[AlbVState, RealVector]:
        """Advance one iteration."""
        return alb_step_vform(state, self.problem, self.config)

    def primal(self, state: AlbVState) -> RealVector:
        """Return w^k, zero before the first step."""
        return _last_primal(self.problem, state.w)
