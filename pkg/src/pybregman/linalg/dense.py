"""Dense linear algebra kernels shared by every solver."""

from __future__ import annotations

import logging
from dataclasses import dataclass
from typing import Any

import numpy as np
import numpy.typing as npt
import scipy.linalg

from pybregman.errors import BregmanInputError, BregmanNumericalError, DimensionMismatchError

_LOGGER = logging.getLogger(__name__)

DenseMatrix = npt.NDArray[np.float64]
RealVector = npt.NDArray[np.float64]

SVD_DRIVERS = ("gesdd", "gesvd")


def as_matrix(data: Any) -> DenseMatrix:
    """Return data as a finite 2-D float64 array.

    Args:
    ----
        data: array-like

    Returns:
    -------
        DenseMatrix

    Raises:
    ------
        BregmanInputError: not 2-D or contains non-finite entries.
    """
    matrix = np.asarray(data, dtype=np.float64)
    if matrix.ndim != 2:
        raise BregmanInputError(f"Expected a 2-D matrix, got {matrix.ndim} dimension(s)")
    if not np.all(np.isfinite(matrix)):
        raise BregmanInputError("Matrix contains non-finite entries")
    return matrix


def as_vector(data: Any) -> RealVector:
    """Return data as a finite 1-D float64 array.

    Args:
    ----
        data: array-like

    Returns:
    -------
        RealVector

    Raises:
    ------
        BregmanInputError: not 1-D or contains non-finite entries.
    """
    vector = np.asarray(data, dtype=np.float64)
    if vector.ndim != 1:
        raise BregmanInputError(f"Expected a 1-D vector, got {vector.ndim} dimension(s)")
    if not np.all(np.isfinite(vector)):
        raise BregmanInputError("Vector contains non-finite entries")
    return vector


def matvec(a: DenseMatrix, x: RealVector) -> RealVector:
    """Return the product a @ x.

    Raises
    ------
        DimensionMismatchError: a.cols != len(x).
    """
    if a.shape[1] != x.shape[0]:
        raise DimensionMismatchError(f"matvec: matrix is {a.shape}, vector has {x.shape[0]}")
    return a @ x


def matvec_t(a: DenseMatrix, y: RealVector) -> RealVector:
    """Return the product a.T @ y without copying the transpose.

    Raises
    ------
        DimensionMismatchError: a.rows != len(y).
    """
    if a.shape[0] != y.shape[0]:
        raise DimensionMismatchError(f"matvec_t: matrix is {a.shape}, vector has {y.shape[0]}")
    return a.T @ y


@dataclass(frozen=True)
class SpectralNormEstimate:

    """Result of the power iteration on a.T @ a."""

    value: float
    iterations: int
    converged: bool


def _start_vectors(n: int) -> list[RealVector]:
    """Deterministic start vectors: all-ones, then alternating signs, then the unit basis."""
    ones = np.ones(n) / np.sqrt(n)
    alternating = np.where(np.arange(n) % 2 == 0, 1.0, -1.0)
    alternating /= np.linalg.norm(alternating)
    candidates = [ones]
    if n > 1:
        candidates.append(alternating)
    candidates.extend(np.eye(n)[i] for i in range(n))
    return candidates


def spectral_norm_estimate(
    a: DenseMatrix,
    tol: float = 1e-12,
    max_iters: int = 10_000,
) -> SpectralNormEstimate:
    """Estimate the largest singular value squared of a by power iteration.

    The iteration runs on a.T @ a from the normalized all-ones vector. When
    that vector lies in the null space the next deterministic candidate is
    used instead. Convergence is judged on an extrapolated error estimate
    delta_k / (1 - rho_k), where rho_k is the ratio of successive changes,
    so the returned value is within tol relative of the limit.

    Args:
    ----
        a: DenseMatrix, nonzero
        tol: relative tolerance, > 0
        max_iters: iteration cap

    Returns:
    -------
        SpectralNormEstimate
    """
    if tol <= 0:
        raise BregmanInputError("spectral norm tolerance must be positive")
    if not np.any(a):
        raise BregmanInputError("spectral norm of a zero matrix is not defined")

    x = next(
        (candidate for candidate in _start_vectors(a.shape[1]) if np.any(a @ candidate)),
        None,
    )
    if x is None:
        raise BregmanInputError("spectral norm of a zero matrix is not defined")

    estimate = 0.0
    previous_delta = np.inf
    for iteration in range(1, max_iters + 1):
        z = a.T @ (a @ x)
        value = float(x @ z)
        norm_z = float(np.linalg.norm(z))
        x = z / norm_z
        delta = abs(value - estimate)
        estimate = value
        if iteration > 1:
            rho = delta / previous_delta if previous_delta > 0 else 0.0
            error = delta / (1.0 - rho) if rho < 1.0 else np.inf
            if error <= tol * value:
                return SpectralNormEstimate(value=value, iterations=iteration, converged=True)
        previous_delta = delta

    return SpectralNormEstimate(value=estimate, iterations=max_iters, converged=False)


def spectral_norm_sq(a: DenseMatrix, tol: float = 1e-12, max_iters: int = 10_000) -> float:
    """Return ||a||^2, the largest singular value squared.

    Args:
    ----
        a: DenseMatrix
        tol: relative tolerance
        max_iters: iteration cap

    Returns:
    -------
        The estimate. A warning is logged when the cap was hit first.
    """
    result = spectral_norm_estimate(a, tol=tol, max_iters=max_iters)
    if not result.converged:
        _LOGGER.warning(
            "Power iteration did not reach tol=%g in %d iterations; returning best estimate %r",
            tol,
            max_iters,
            result.value,
        )
    return result.value


@dataclass(frozen=True, eq=False)
class SvdFactors:

    """Thin SVD y = u @ diag(sigma) @ vt, sigma nonincreasing."""

    u: DenseMatrix
    sigma: RealVector
    vt: DenseMatrix

    def reconstruct(self) -> DenseMatrix:
        """Return u @ diag(sigma) @ vt."""
        return (self.u * self.sigma) @ self.vt


def svd(y: DenseMatrix) -> SvdFactors:
    """Compute the dense SVD of y.

    LAPACK gesdd is tried first and gesvd is the fallback.

    Args:
    ----
        y: DenseMatrix with finite entries

    Returns:
    -------
        SvdFactors

    Raises:
    ------
        BregmanInputError: y has non-finite entries.
        BregmanNumericalError: both drivers failed to converge.
    """
    if not np.all(np.isfinite(y)):
        raise BregmanInputError("svd: matrix contains non-finite entries")

    last_error: Exception | None = None
    for driver in SVD_DRIVERS:
        try:
            u, sigma, vt = scipy.linalg.svd(
                y,
                full_matrices=False,
                check_finite=False,
                lapack_driver=driver,
            )
        except np.linalg.LinAlgError as exception:
            _LOGGER.warning("SVD driver %s failed on %s matrix: %s", driver, y.shape, exception)
            last_error = exception
            continue
        return SvdFactors(u=u, sigma=sigma, vt=vt)

    raise BregmanNumericalError(
        f"SVD did not converge: shape={y.shape}, "
        f"frobenius={float(np.linalg.norm(y)):.6e}, max_abs={float(np.max(np.abs(y))):.6e}"
    ) from last_error
