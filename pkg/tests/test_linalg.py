"""Test the dense kernels and the seeded random streams."""
from __future__ import annotations

import logging
from typing import Any

import numpy as np
import pytest

from pybregman.errors import BregmanInputError, BregmanNumericalError, DimensionMismatchError
from pybregman.linalg import (
    RngStream,
    as_matrix,
    as_vector,
    matvec,
    matvec_t,
    sample_bernoulli_pm1,
    sample_gaussian,
    sample_uniform_pm1,
    spectral_norm_estimate,
    spectral_norm_sq,
    svd,
)


def test_as_matrix_validates() -> None:
    """Test the validating constructors."""
    assert as_matrix([[1, 2], [3, 4]]).dtype == np.float64
    assert as_vector([1, 2, 3]).shape == (3,)
    with pytest.raises(BregmanInputError):
        as_matrix([1.0, 2.0])
    with pytest.raises(BregmanInputError):
        as_vector([[1.0]])
    with pytest.raises(BregmanInputError):
        as_matrix([[1.0, np.nan]])
    with pytest.raises(BregmanInputError):
        as_vector([np.inf])


def test_matvec_known_values() -> None:
    """Test A x and A^T y on a small matrix."""
    a = as_matrix([[1.0, 2.0], [3.0, 4.0]])
    assert matvec(a, np.array([1.0, 1.0])).tolist() == [3.0, 7.0]
    assert matvec_t(a, np.array([1.0, 0.0])).tolist() == [1.0, 2.0]
    assert matvec(np.zeros((3, 5)), np.ones(5)).tolist() == [0.0, 0.0, 0.0]


def test_matvec_dimension_mismatch() -> None:
    """Test that shape disagreement is rejected."""
    a = np.ones((2, 3))
    with pytest.raises(DimensionMismatchError):
        matvec(a, np.ones(2))
    with pytest.raises(DimensionMismatchError):
        matvec_t(a, np.ones(3))


def test_adjoint_identity() -> None:
    """Test <A x, y> = <x, A^T y> on a 200 x 500 matrix."""
    rng = RngStream(7)
    a = rng.gaussian_matrix(200, 500)
    x, y = rng.gaussian(500), rng.gaussian(200)
    left = float(matvec(a, x) @ y)
    right = float(x @ matvec_t(a, y))
    scale = float(np.linalg.norm(a) * np.linalg.norm(x) * np.linalg.norm(y))
    assert abs(left - right) <= 1e-12 * scale


def test_spectral_norm_identity_and_scaled() -> None:
    """Test ||I||^2 = 1 and ||3 I||^2 = 9."""
    assert spectral_norm_sq(np.eye(4)) == pytest.approx(1.0, rel=1e-12)
    assert spectral_norm_sq(3.0 * np.eye(4)) == pytest.approx(9.0, rel=1e-12)


def test_spectral_norm_matches_svd() -> None:
    """Test the power iteration against the largest singular value."""
    a = RngStream(3).gaussian_matrix(100, 200)
    expected = float(np.linalg.svd(a, compute_uv=False)[0] ** 2)
    assert spectral_norm_sq(a) == pytest.approx(expected, rel=1e-8)


def test_spectral_norm_restarts_outside_null_space() -> None:
    """Test the deterministic restart when the all-ones start is in the null space."""
    estimate = spectral_norm_estimate(np.array([[1.0, -1.0]]))
    assert estimate.converged
    assert estimate.value == pytest.approx(2.0, rel=1e-12)


def test_spectral_norm_rejects_zero_matrix() -> None:
    """Test that the zero matrix has no spectral norm estimate."""
    with pytest.raises(BregmanInputError):
        spectral_norm_sq(np.zeros((3, 4)))
    with pytest.raises(BregmanInputError):
        spectral_norm_estimate(np.eye(2), tol=0.0)


def test_spectral_norm_cap_logs_warning(caplog: pytest.LogCaptureFixture) -> None:
    """Test that hitting the cap returns the estimate with a warning."""
    a = RngStream(5).gaussian_matrix(30, 40)
    assert not spectral_norm_estimate(a, max_iters=1).converged
    with caplog.at_level(logging.WARNING, logger="pybregman.linalg.dense"):
        value = spectral_norm_sq(a, max_iters=1)
    assert np.isfinite(value)
    assert value > 0
    assert "did not reach" in caplog.text


def test_svd_small_cases() -> None:
    """Test the SVD of a diagonal and of the zero matrix."""
    assert svd(np.diag([2.0, 1.0])).sigma.tolist() == pytest.approx([2.0, 1.0])
    assert not np.any(svd(np.zeros((3, 3))).sigma)


def test_svd_reconstruction() -> None:
    """Test that the factors reproduce the matrix."""
    y = RngStream(11).gaussian_matrix(6, 4)
    factors = svd(y)
    assert np.all(np.diff(factors.sigma) <= 0)
    error = np.linalg.norm(factors.reconstruct() - y)
    assert error <= 1e-10 * np.linalg.norm(y)


def test_svd_rejects_non_finite() -> None:
    """Test that NaN entries are refused before LAPACK sees them."""
    with pytest.raises(BregmanInputError):
        svd(np.array([[np.nan, 0.0], [0.0, 1.0]]))


def test_svd_falls_back_to_gesvd(mocker: Any) -> None:
    """Test the driver fallback after a gesdd failure."""
    y = np.diag([3.0, 1.0])
    real = np.linalg.svd(y)
    patched = mocker.patch(
        "scipy.linalg.svd",
        side_effect=[np.linalg.LinAlgError("gesdd failed"), real],
    )
    factors = svd(y)
    assert factors.sigma.tolist() == pytest.approx([3.0, 1.0])
    assert [call.kwargs["lapack_driver"] for call in patched.call_args_list] == [
        "gesdd",
        "gesvd",
    ]


def test_svd_failure_carries_diagnostics(mocker: Any) -> None:
    """Test the numerical error when both drivers fail."""
    mocker.patch("scipy.linalg.svd", side_effect=np.linalg.LinAlgError("no convergence"))
    with pytest.raises(BregmanNumericalError, match="frobenius"):
        svd(np.eye(2))


def test_rng_is_deterministic() -> None:
    """Test that one seed gives one sequence."""
    first, second = RngStream(42), RngStream(42)
    assert np.array_equal(sample_gaussian(first, 50), sample_gaussian(second, 50))
    assert sample_uniform_pm1(first) == sample_uniform_pm1(second)
    assert sample_bernoulli_pm1(first) == sample_bernoulli_pm1(second)
    assert not np.array_equal(RngStream(1).gaussian(10), RngStream(2).gaussian(10))


def test_rng_laws() -> None:
    """Test the moments and supports of the sampling laws."""
    rng = RngStream(0)
    samples = rng.gaussian(100_000)
    assert abs(samples.mean()) < 0.015
    assert samples.var() == pytest.approx(1.0, rel=0.05)
    assert set(np.unique(rng.bernoulli_pm1(1000))) == {-1.0, 1.0}
    uniform = rng.uniform_pm1(1000)
    assert np.all((uniform >= -1.0) & (uniform < 1.0))
    positive = rng.uniform_positive(1000)
    assert np.all((positive > 0.0) & (positive <= 1.0))


def test_sample_without_replacement() -> None:
    """Test that draws are distinct and in range."""
    picks = RngStream(9).sample_without_replacement(100, 40)
    assert picks.dtype == np.int64
    assert len(set(picks.tolist())) == 40
    assert picks.min() >= 0
    assert picks.max() < 100
    assert sorted(RngStream(9).sample_without_replacement(5, 5).tolist()) == [0, 1, 2, 3, 4]
    with pytest.raises(BregmanInputError):
        RngStream(9).sample_without_replacement(3, 4)


def test_rng_rejects_bad_seed() -> None:
    """Test the seed range."""
    with pytest.raises(BregmanInputError):
        RngStream(-1)
    with pytest.raises(BregmanInputError):
        RngStream(2**64)
