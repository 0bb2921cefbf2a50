"""Iteration states.

Every step builds a new state; arrays are never updated in place.
The dual and v-form states carry the last primal point w^k, None before the first step.
"""
from __future__ import annotations

from dataclasses import dataclass

from pybregman.linalg import DenseMatrix, RealVector


@dataclass(frozen=True, eq=False)
class LbPrimalState:

    """Primal linearized Bregman state (also the exact Bregman state)."""

    x: RealVector
    p: RealVector
    k: int = 0


@dataclass(frozen=True, eq=False)
class DualState:

    """Dual gradient state; y^0 = tau b."""

    y: RealVector
    w: RealVector | None = None
    k: int = 0


@dataclass(frozen=True, eq=False)
class VState:

    """v-form state; v^0 = tau A^T b."""

    v: RealVector
    w: RealVector | None = None
    k: int = 0


@dataclass(frozen=True, eq=False)
class AlbState:

    """Primal accelerated state."""

    x: RealVector
    p: RealVector
    x_tilde: RealVector
    p_tilde: RealVector
    k: int = 0


@dataclass(frozen=True, eq=False)
class AccelDualState:

    """Accelerated dual gradient state."""

    y: RealVector
    y_tilde: RealVector
    w: RealVector | None = None
    k: int = 0


@dataclass(frozen=True, eq=False)
class AlbVState:

    """Accelerated v-form state."""

    v: RealVector
    v_tilde: RealVector
    w: RealVector | None = None
    k: int = 0


@dataclass(frozen=True, eq=False)
class AugLagState:

    """Augmented Lagrangian state; p^k = A^T lam^k."""

    x: RealVector
    lam: RealVector
    k: int = 0


@dataclass(frozen=True, eq=False)
class McState:

    """Matrix completion state, used by both the plain and the accelerated step."""

    x: DenseMatrix
    p: DenseMatrix
    x_tilde: DenseMatrix
    p_tilde: DenseMatrix
    k: int = 0


@dataclass(frozen=True, eq=False)
class McDualState:

    """Matrix completion dual state; Y^0 = tau P_omega(M)."""

    y: DenseMatrix
    y_tilde: DenseMatrix
    w: DenseMatrix | None = None
    k: int = 0
