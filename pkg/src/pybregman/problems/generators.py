"""Instance generators following the compressed sensing and matrix completion protocols."""

from __future__ import annotations

import logging

import numpy as np

from pybregman.errors import BregmanInputError
from pybregman.linalg import DenseMatrix, RealVector, RngStream

from .models import (
    BasisPursuitProblem,
    BpMeta,
    MatrixCompletionProblem,
    MatrixKind,
    McMeta,
    SignalKind,
)

_LOGGER = logging.getLogger(__name__)

CS_M_RATIO = 0.4
CS_S_RATIO = 0.2


def default_bp_dims(n: int) -> tuple[int, int, int]:
    """Return (n, m, s) with m = 0.4 n and s = 0.2 m, rounded."""
    m = round(CS_M_RATIO * n)
    s = round(CS_S_RATIO * m)
    return n, m, s


def _sensing_matrix(rng: RngStream, kind: MatrixKind, m: int, n: int) -> DenseMatrix:
    if kind is MatrixKind.BERNOULLI:
        return rng.bernoulli_pm1((m, n))
    a = rng.gaussian_matrix(m, n)
    if kind is MatrixKind.NORMALIZED_GAUSSIAN:
        a /= np.linalg.norm(a, axis=0, keepdims=True)
    return a


def _signal_values(rng: RngStream, kind: SignalKind, s: int) -> RealVector:
    if kind is SignalKind.GAUSSIAN:
        return rng.gaussian(s)
    if kind is SignalKind.UNIFORM:
        return rng.uniform_pm1(s)
    return rng.uniform_positive(s)


def gen_bp(
    matrix_kind: MatrixKind,
    signal_kind: SignalKind,
    n: int,
    m: int,
    s: int,
    seed: int,
) -> BasisPursuitProblem:
    """Generate a basis pursuit instance b = A x_true with an s-sparse x_true.

    Draw order from one stream: A (row-major), the support, then the values.

    Args:
    ----
        matrix_kind: MatrixKind
        signal_kind: SignalKind
        n: signal length
        m: number of measurements
        s: sparsity
        seed: int

    Returns:
    -------
        BasisPursuitProblem

    Raises:
    ------
        BregmanInputError: unless 0 < s <= m <= n.
    """
    if not 0 < s <= m <= n:
        raise BregmanInputError(f"need 0 < s <= m <= n, got n={n}, m={m}, s={s}")

    rng = RngStream(seed)
    a = _sensing_matrix(rng, MatrixKind(matrix_kind), m, n)
    support = rng.sample_without_replacement(n, s)
    x_true = np.zeros(n)
    x_true[support] = _signal_values(rng, SignalKind(signal_kind), s)
    b = a @ x_true

    meta = BpMeta(
        matrix_kind=matrix_kind,
        signal_kind=signal_kind,
        n=n,
        m=m,
        s=s,
        seed=seed,
    )
    _LOGGER.debug("Generated basis pursuit instance %s", meta)
    return BasisPursuitProblem(a=a, b=b, x_true=x_true, meta=meta)


def mc_sample_count(n: int, r: int, fr: float) -> int:
    """Return p = round(r(2n - r) / fr)."""
    return round(r * (2 * n - r) / fr)


def gen_mc(n: int, r: int, fr: float, seed: int) -> MatrixCompletionProblem:
    """Generate a rank-r n x n completion instance M = M_L M_R^T.

    Omega holds p = round(r(2n - r) / fr) entries drawn uniformly without
    replacement; the observed values are M on omega.

    Args:
    ----
        n: dimension
        r: rank, 0 < r < n
        fr: degrees-of-freedom ratio, 0 < fr < 1
        seed: int

    Returns:
    -------
        MatrixCompletionProblem

    Raises:
    ------
        BregmanInputError: invalid rank or ratio, or p > n^2.
    """
    if not 0 < r < n:
        raise BregmanInputError(f"need 0 < r < n, got n={n}, r={r}")
    if not 0 < fr < 1:
        raise BregmanInputError(f"need 0 < fr < 1, got {fr}")
    p = mc_sample_count(n, r, fr)
    if p > n * n:
        raise BregmanInputError(f"FR too small for dimension: p={p} exceeds n^2={n * n}")

    rng = RngStream(seed)
    m_left = rng.gaussian_matrix(n, r)
    m_right = rng.gaussian_matrix(n, r)
    m_true = m_left @ m_right.T
    flat = np.sort(rng.sample_without_replacement(n * n, p))
    omega = np.column_stack(np.divmod(flat, n)).astype(np.int64)
    observed = m_true[omega[:, 0], omega[:, 1]]

    meta = McMeta(n=n, r=r, p=p, sr=p / n**2, fr=r * (2 * n - r) / p, seed=seed)
    _LOGGER.debug("Generated matrix completion instance %s", meta)
    return MatrixCompletionProblem(
        n=n,
        r=r,
        omega=omega,
        observed=observed,
        m_true=m_true,
        meta=meta,
    )
