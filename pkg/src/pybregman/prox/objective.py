"""Objective kinds J supported by the solvers."""
from __future__ import annotations

from enum import Enum

import numpy as np

from pybregman.linalg import DenseMatrix, RealVector, svd


class ObjectiveKind(str, Enum):

    """The convex function J being minimized."""

    L1 = "l1"
    L1_NONNEG = "l1-nonneg"
    NUCLEAR = "nuclear"

    @property
    def is_vector(self) -> bool:
        """Return True for objectives over vectors."""
        return self is not ObjectiveKind.NUCLEAR


def objective_value(kind: ObjectiveKind, x: RealVector | DenseMatrix) -> float:
    """Evaluate J(x).

    Args:
    ----
        kind: ObjectiveKind
        x: vector for the l1 kinds, matrix for the nuclear norm

    Returns:
    -------
        J(x); +inf for L1_NONNEG outside the nonnegative orthant.
    """
    if kind is ObjectiveKind.NUCLEAR:
        return float(np.sum(svd(x).sigma))
    if kind is ObjectiveKind.L1_NONNEG and np.any(x < 0):
        return float("inf")
    return float(np.sum(np.abs(x)))
