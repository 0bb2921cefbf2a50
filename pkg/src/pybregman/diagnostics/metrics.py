"""Residual and error metrics."""
from __future__ import annotations

import numpy as np
import numpy.typing as npt

from pybregman.errors import BregmanInputError
from pybregman.linalg import DenseMatrix, RealVector, matvec
from pybregman.problems import BasisPursuitProblem, MatrixCompletionProblem


def residual_rel_bp(x: RealVector, problem: BasisPursuitProblem) -> float:
    """Return ||A x - b|| / ||b||.

    Raises
    ------
        BregmanInputError: b = 0.
    """
    if problem.norm_b == 0.0:
        raise BregmanInputError("relative residual is undefined for b = 0")
    return float(np.linalg.norm(matvec(problem.a, x) - problem.b)) / problem.norm_b


def residual_rel_mc(x: DenseMatrix, problem: MatrixCompletionProblem) -> float:
    """Return ||P_omega(X) - P_omega(M)||_F / ||P_omega(M)||_F.

    Raises
    ------
        BregmanInputError: every observed entry is zero.
    """
    if problem.norm_observed == 0.0:
        raise BregmanInputError("relative residual is undefined for P_omega(M) = 0")
    on_omega = x[problem.omega[:, 0], problem.omega[:, 1]]
    return float(np.linalg.norm(on_omega - problem.observed)) / problem.norm_observed


def stopping_residual(
    x: npt.NDArray[np.float64],
    problem: BasisPursuitProblem | MatrixCompletionProblem,
) -> float:
    """Return the relative residual, or the absolute one when the data is zero."""
    if isinstance(problem, MatrixCompletionProblem):
        if problem.norm_observed == 0.0:
            return float(np.linalg.norm(x[problem.omega[:, 0], problem.omega[:, 1]]))
        return residual_rel_mc(x, problem)
    if problem.norm_b == 0.0:
        return float(np.linalg.norm(matvec(problem.a, x)))
    return residual_rel_bp(x, problem)


def rel_error(
    x: npt.NDArray[np.float64],
    x_true: npt.NDArray[np.float64] | None,
) -> float | None:
    """Return ||x - x_true|| / ||x_true||, or None without ground truth.

    Raises
    ------
        BregmanInputError: x_true = 0.
    """
    if x_true is None:
        return None
    scale = float(np.linalg.norm(x_true))
    if scale == 0.0:
        raise BregmanInputError("relative error is undefined for a zero ground truth")
    return float(np.linalg.norm(x - x_true)) / scale


def ground_truth(
    problem: BasisPursuitProblem | MatrixCompletionProblem,
) -> npt.NDArray[np.float64] | None:
    """Return x_true or M when the instance carries it."""
    if isinstance(problem, MatrixCompletionProblem):
        return problem.m_true
    return problem.x_true
