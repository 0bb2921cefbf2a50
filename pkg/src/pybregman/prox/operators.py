"""Closed-form shrinkage operators and the l1 Bregman distance."""

from __future__ import annotations

import numpy as np

from pybregman.errors import BregmanInputError, SubgradientError
from pybregman.linalg import DenseMatrix, RealVector, svd

from .objective import ObjectiveKind

SUBGRADIENT_TOL = 1e-9


def shrink_vec(z: RealVector, alpha: float) -> RealVector:
    """Soft-threshold z componentwise: sgn(z) * max(|z| - alpha, 0).

    Entries with |z_i| == alpha map to exactly 0.

    Args:
    ----
        z: RealVector
        alpha: threshold, > 0

    Returns:
    -------
        RealVector
    """
    if alpha <= 0:
        raise BregmanInputError(f"shrink threshold must be positive, got {alpha}")
    return np.sign(z) * np.maximum(np.abs(z) - alpha, 0.0)


def shrink_matrix(y: DenseMatrix, gamma: float) -> DenseMatrix:
    """Soft-threshold the singular values of y at gamma.

    This is the prox of gamma * ||.||_* at y.

    Args:
    ----
        y: DenseMatrix
        gamma: threshold, > 0

    Returns:
    -------
        DenseMatrix U diag(max(sigma - gamma, 0)) V^T
    """
    if gamma <= 0:
        raise BregmanInputError(f"shrink threshold must be positive, got {gamma}")
    factors = svd(y)
    sigma = np.maximum(factors.sigma - gamma, 0.0)
    keep = sigma > 0
    if not np.any(keep):
        return np.zeros_like(y)
    return (factors.u[:, keep] * sigma[keep]) @ factors.vt[keep, :]


def prox_l1_nonneg(v: RealVector, mu: float) -> RealVector:
    """Solve min_{w >= 0} ||w||_1 + ||w - mu v||^2 / (2 mu).

    The minimizer is w_i = mu * max(v_i - 1, 0).

    Args:
    ----
        v: RealVector
        mu: float, > 0

    Returns:
    -------
        Nonnegative RealVector
    """
    if mu <= 0:
        raise BregmanInputError(f"mu must be positive, got {mu}")
    return mu * np.maximum(v - 1.0, 0.0)


def prox_objective(
    kind: ObjectiveKind,
    v: RealVector | DenseMatrix,
    mu: float,
) -> RealVector | DenseMatrix:
    """Return argmin_w J(w) + ||w - mu v||^2 / (2 mu) for the objective kind.

    Args:
    ----
        kind: ObjectiveKind
        v: vector (l1 kinds) or matrix (nuclear)
        mu: float, > 0

    Returns:
    -------
        The minimizer w.
    """
    if kind is ObjectiveKind.L1:
        return mu * shrink_vec(v, 1.0)
    if kind is ObjectiveKind.L1_NONNEG:
        return prox_l1_nonneg(v, mu)
    return shrink_matrix(mu * v, mu)


def bregman_distance_l1(
    u: RealVector,
    v: RealVector,
    p: RealVector,
    tol: float = SUBGRADIENT_TOL,
) -> float:
    """Return D(u, v) = ||u||_1 - ||v||_1 - <p, u - v> for p in the subdifferential at v.

    Args:
    ----
        u: RealVector
        v: RealVector
        p: subgradient of ||.||_1 at v
        tol: tolerance for the subgradient check

    Returns:
    -------
        float

    Raises:
    ------
        SubgradientError: p is not in the subdifferential of ||.||_1 at v.
    """
    too_large = np.flatnonzero(np.abs(p) > 1.0 + tol)
    if too_large.size:
        index = int(too_large[0])
        raise SubgradientError(
            f"|p[{index}]| = {abs(p[index])!r} exceeds 1",
            coordinate=index,
        )
    support = v != 0
    wrong_sign = np.flatnonzero(support & (np.abs(p - np.sign(v)) > tol))
    if wrong_sign.size:
        index = int(wrong_sign[0])
        raise SubgradientError(
            f"p[{index}] = {p[index]!r} but sign(v[{index}]) = {np.sign(v[index])!r}",
            coordinate=index,
        )
    return float(np.sum(np.abs(u)) - np.sum(np.abs(v)) - p @ (u - v))
