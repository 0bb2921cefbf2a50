"""Dual objective, Lagrangian and Lipschitz evaluators."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from pybregman.errors import DimensionMismatchError, SolverMismatchError
from pybregman.linalg import RealVector, matvec, matvec_t
from pybregman.prox import ObjectiveKind, objective_value, prox_objective

from .models import BasisPursuitProblem, MatrixCompletionProblem


def _require_vector_objective(objective: ObjectiveKind) -> None:
    if not ObjectiveKind(objective).is_vector:
        raise SolverMismatchError(f"dual objective is defined for l1 kinds, not {objective}")


def dual_minimizer(
    y: RealVector,
    problem: BasisPursuitProblem,
    mu: float,
    objective: ObjectiveKind = ObjectiveKind.L1,
) -> RealVector:
    """Return w* = argmin_w J(w) + ||w||^2 / (2 mu) - <y, A w - b>."""
    _require_vector_objective(objective)
    return prox_objective(ObjectiveKind(objective), matvec_t(problem.a, y), mu)


def lagrangian(
    x: RealVector,
    y: RealVector,
    problem: BasisPursuitProblem,
    mu: float,
    objective: ObjectiveKind = ObjectiveKind.L1,
) -> float:
    """Return L_mu(x, y) = J(x) + ||x||^2 / (2 mu) - <y, A x - b>.

    Args:
    ----
        x: primal point, length n
        y: multiplier, length m
        problem: BasisPursuitProblem
        mu: float
        objective: ObjectiveKind

    Returns:
    -------
        float
    """
    if y.shape[0] != problem.b.shape[0]:
        raise DimensionMismatchError(
            f"multiplier has {y.shape[0]} entries, b has {problem.b.shape[0]}"
        )
    residual = matvec(problem.a, x) - problem.b
    penalty = float(x @ x) / (2.0 * mu)
    return objective_value(ObjectiveKind(objective), x) + penalty - float(y @ residual)


def dual_objective(
    y: RealVector,
    problem: BasisPursuitProblem,
    mu: float,
    objective: ObjectiveKind = ObjectiveKind.L1,
) -> tuple[float, RealVector]:
    """Return G_mu(y) = -L_mu(w*, y) together with the minimizer w*.

    Args:
    ----
        y: RealVector, length m
        problem: BasisPursuitProblem
        mu: float
        objective: L1 or L1_NONNEG

    Returns:
    -------
        (G_mu(y), w*)
    """
    w_star = dual_minimizer(y, problem, mu, objective)
    return -lagrangian(w_star, y, problem, mu, objective), w_star


def dual_gradient(
    y: RealVector,
    problem: BasisPursuitProblem,
    mu: float,
    objective: ObjectiveKind = ObjectiveKind.L1,
) -> RealVector:
    """Return grad G_mu(y) = A w* - b."""
    w_star = dual_minimizer(y, problem, mu, objective)
    return matvec(problem.a, w_star) - problem.b


def lipschitz_bound(problem: BasisPursuitProblem | MatrixCompletionProblem, mu: float) -> float:
    """Return an upper bound on the Lipschitz constant of grad G_mu.

    mu ||A||^2 for basis pursuit; mu for matrix completion since ||P_omega|| = 1.
    """
    if isinstance(problem, MatrixCompletionProblem):
        return float(mu)
    return float(mu * problem.norm_a_sq)


def relative_gradient_error(
    y: RealVector,
    problem: BasisPursuitProblem,
    mu: float,
    step: float = 1e-6,
    objective: ObjectiveKind = ObjectiveKind.L1,
) -> float:
    """Compare grad G_mu(y) against central finite differences.

    Returns
    -------
        ||g_fd - g|| / max(||g||, ||g_fd||, 1e-300)
    """
    analytic = dual_gradient(y, problem, mu, objective)
    numeric = np.empty_like(analytic)
    for i in range(y.shape[0]):
        shift = np.zeros_like(y)
        shift[i] = step
        upper, _ = dual_objective(y + shift, problem, mu, objective)
        lower, _ = dual_objective(y - shift, problem, mu, objective)
        numeric[i] = (upper - lower) / (2.0 * step)
    scale = max(float(np.linalg.norm(analytic)), float(np.linalg.norm(numeric)), 1e-300)
    return float(np.linalg.norm(numeric - analytic)) / scale


@dataclass(frozen=True, eq=False)
class LagrangianPoint:

    """A primal point, a multiplier and L_mu evaluated there."""

    x: RealVector
    y: RealVector
    value: float


def lagrangian_point(
    x: RealVector,
    y: RealVector,
    problem: BasisPursuitProblem,
    mu: float,
    objective: ObjectiveKind = ObjectiveKind.L1,
) -> LagrangianPoint:
    """Evaluate L_mu at (x, y) and keep the arguments alongside the value."""
    return LagrangianPoint(x=x, y=y, value=lagrangian(x, y, problem, mu, objective))
