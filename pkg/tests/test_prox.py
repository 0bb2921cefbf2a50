"""Test the shrinkage operators and the l1 Bregman distance."""
from __future__ import annotations

import numpy as np
import pytest

from pybregman.diagnostics import nonneg_grid_oracle, shrink_grid_oracle
from pybregman.errors import BregmanInputError, SubgradientError
from pybregman.linalg import RngStream
from pybregman.prox import (
    ObjectiveKind,
    bregman_distance_l1,
    objective_value,
    prox_l1_nonneg,
    prox_objective,
    shrink_matrix,
    shrink_vec,
)


@pytest.mark.parametrize(
    ("z", "alpha", "expected"),
    [
        ([0.0, 0.0, 0.0], 1.0, [0.0, 0.0, 0.0]),
        ([2.0, -0.5, 1.0], 1.0, [1.0, 0.0, 0.0]),
        ([-3.0, 0.25], 0.5, [-2.5, 0.0]),
    ],
)
def test_shrink_vec_values(z: list[float], alpha: float, expected: list[float]) -> None:
    """Test the soft-threshold formula, ties mapping to zero."""
    assert shrink_vec(np.array(z), alpha).tolist() == expected


def test_shrink_vec_rejects_non_positive_threshold() -> None:
    """Test the threshold precondition."""
    with pytest.raises(BregmanInputError):
        shrink_vec(np.ones(2), 0.0)
    with pytest.raises(BregmanInputError):
        shrink_matrix(np.eye(2), -1.0)
    with pytest.raises(BregmanInputError):
        prox_l1_nonneg(np.ones(2), 0.0)


def test_shrink_vec_matches_grid_search() -> None:
    """Test the closed form against brute-force minimization."""
    rng = RngStream(4)
    for _ in range(20):
        z = float(3.0 * rng.uniform_pm1(1)[0])
        alpha = float(0.1 + rng.uniform_positive(1)[0])
        closed = float(shrink_vec(np.array([z]), alpha)[0])
        assert abs(shrink_grid_oracle(z, alpha) - closed) <= 1e-4


def test_shrink_vec_is_nonexpansive() -> None:
    """Test ||shrink(s) - shrink(t)|| <= ||s - t|| on random pairs."""
    rng = RngStream(8)
    for _ in range(500):
        s, t = rng.gaussian(6), rng.gaussian(6)
        moved = np.linalg.norm(shrink_vec(s, 0.3) - shrink_vec(t, 0.3))
        assert moved <= np.linalg.norm(s - t) + 1e-15


def test_shrink_matrix_on_diagonal() -> None:
    """Test that the matrix shrink of a diagonal matrix shrinks the diagonal."""
    assert np.allclose(shrink_matrix(np.diag([3.0, 1.0]), 2.0), np.diag([1.0, 0.0]), atol=1e-12)
    assert not np.any(shrink_matrix(np.zeros((4, 4)), 1.0))
    diagonal = np.array([-2.0, 0.5, 1.5, 4.0])
    expected = np.diag(shrink_vec(diagonal, 0.7))
    assert np.max(np.abs(shrink_matrix(np.diag(diagonal), 0.7) - expected)) <= 1e-12


def test_shrink_matrix_is_the_prox() -> None:
    """Test that random perturbations never lower gamma ||X||_* + ||X - Y||^2 / 2."""
    rng = RngStream(2)
    y = rng.gaussian_matrix(8, 6)
    gamma = 1.5
    x = shrink_matrix(y, gamma)

    def value(point: np.ndarray) -> float:
        nuclear = objective_value(ObjectiveKind.NUCLEAR, point)
        return gamma * nuclear + 0.5 * float(np.sum((point - y) ** 2))

    best = value(x)
    for _ in range(100):
        assert value(x + 1e-3 * rng.gaussian_matrix(8, 6)) >= best - 1e-9


@pytest.mark.parametrize(
    ("v", "mu", "expected"),
    [
        ([0.0, 0.0], 5.0, [0.0, 0.0]),
        ([2.0, -3.0], 5.0, [5.0, 0.0]),
        ([1.0, 1.5], 2.0, [0.0, 1.0]),
    ],
)
def test_prox_l1_nonneg_values(v: list[float], mu: float, expected: list[float]) -> None:
    """Test w = mu max(v - 1, 0)."""
    assert prox_l1_nonneg(np.array(v), mu).tolist() == expected


def test_prox_l1_nonneg_matches_grid_search() -> None:
    """Test the nonnegative prox against brute-force minimization."""
    rng = RngStream(6)
    for _ in range(20):
        v = float(3.0 * rng.uniform_pm1(1)[0])
        mu = float(0.5 + 4.0 * rng.uniform_positive(1)[0])
        closed = float(prox_l1_nonneg(np.array([v]), mu)[0])
        assert closed >= 0.0
        assert abs(nonneg_grid_oracle(v, mu) - closed) <= 1e-4


def test_prox_objective_dispatch() -> None:
    """Test that each objective kind routes to its closed form."""
    v = np.array([2.0, -3.0, 0.5])
    assert prox_objective(ObjectiveKind.L1, v, 5.0).tolist() == [5.0, -10.0, 0.0]
    assert prox_objective(ObjectiveKind.L1_NONNEG, v, 5.0).tolist() == [5.0, 0.0, 0.0]
    nuclear = prox_objective(ObjectiveKind.NUCLEAR, np.diag([2.0, 0.5]), 5.0)
    assert np.allclose(nuclear, np.diag([5.0, 0.0]), atol=1e-12)


def test_objective_value() -> None:
    """Test J for the three objective kinds."""
    x = np.array([1.0, -2.0, 0.0])
    assert objective_value(ObjectiveKind.L1, x) == 3.0
    assert objective_value(ObjectiveKind.L1_NONNEG, x) == float("inf")
    assert objective_value(ObjectiveKind.L1_NONNEG, np.abs(x)) == 3.0
    assert objective_value(ObjectiveKind.NUCLEAR, np.diag([3.0, -1.0])) == pytest.approx(4.0)
    assert ObjectiveKind.L1.is_vector
    assert not ObjectiveKind.NUCLEAR.is_vector


def test_bregman_distance_values() -> None:
    """Test D(u, v) on known points."""
    assert bregman_distance_l1(np.array([1.0, 0.0]), np.zeros(2), np.zeros(2)) == 1.0
    v = np.array([0.5, -1.0, 0.0])
    p = np.array([1.0, -1.0, 0.3])
    assert bregman_distance_l1(v, v, p) == 0.0


def test_bregman_distance_is_nonnegative() -> None:
    """Test the subgradient inequality on random valid triples."""
    rng = RngStream(12)
    for _ in range(200):
        u, v = rng.gaussian(5), rng.gaussian(5)
        v[rng.sample_without_replacement(5, 2)] = 0.0
        p = np.where(v != 0, np.sign(v), rng.uniform_pm1(5))
        assert bregman_distance_l1(u, v, p) >= -1e-12


def test_bregman_distance_rejects_invalid_subgradient() -> None:
    """Test that the first offending coordinate is reported."""
    with pytest.raises(SubgradientError) as too_large:
        bregman_distance_l1(np.zeros(3), np.zeros(3), np.array([0.0, 1.5, 0.0]))
    assert too_large.value.coordinate == 1

    with pytest.raises(SubgradientError) as wrong_sign:
        bregman_distance_l1(np.zeros(2), np.array([1.0, -1.0]), np.array([1.0, 1.0]))
    assert wrong_sign.value.coordinate == 1
