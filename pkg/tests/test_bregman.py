"""Test the exact Bregman iteration and the augmented Lagrangian method."""
from __future__ import annotations

import numpy as np
import pytest

from pybregman.diagnostics import NeverStop
from pybregman.errors import BregmanInputError, InnerSolverError
from pybregman.linalg import matvec_t
from pybregman.problems import BasisPursuitProblem, MatrixKind, SignalKind, gen_bp
from pybregman.solvers import (
    Variant,
    auglag_step,
    bregman_exact_step,
    initial_auglag_state,
    initial_bregman_state,
    make_config,
    run,
    solve_l1_least_squares,
)

INNER_TOL = 1e-10
OUTER_ITERATIONS = 10


@pytest.fixture(name="problem")
def fixture_problem() -> BasisPursuitProblem:
    """Return a 20 x 50 instance."""
    return gen_bp(MatrixKind.GAUSSIAN, SignalKind.GAUSSIAN, 50, 20, 4, seed=2)


def test_bregman_matches_augmented_lagrangian(problem: BasisPursuitProblem) -> None:
    """Test equal x-sequences and p^k = A^T lam^k for ten outer steps."""
    bregman = initial_bregman_state(problem)
    auglag = initial_auglag_state(problem)
    for _ in range(OUTER_ITERATIONS):
        bregman = bregman_exact_step(bregman, problem, INNER_TOL)
        auglag = auglag_step(auglag, problem, INNER_TOL)
        assert np.max(np.abs(bregman.x - auglag.x)) <= 1e-6
        assert np.max(np.abs(bregman.p - matvec_t(problem.a, auglag.lam))) <= 1e-6
    assert bregman.k == auglag.k == OUTER_ITERATIONS


def test_bregman_residual_decreases(problem: BasisPursuitProblem) -> None:
    """Test that the outer iteration drives A x toward b."""
    state = initial_bregman_state(problem)
    residuals = []
    for _ in range(OUTER_ITERATIONS):
        state = bregman_exact_step(state, problem, INNER_TOL)
        residuals.append(float(np.linalg.norm(problem.a @ state.x - problem.b)))
    assert residuals[-1] < residuals[0]
    assert residuals[-1] <= 1e-6 * problem.norm_b


def test_zero_data_stays_at_zero(problem: BasisPursuitProblem) -> None:
    """Test that b = 0 is stationary for both outer methods."""
    zero = BasisPursuitProblem(a=problem.a, b=np.zeros(20))
    assert not np.any(bregman_exact_step(initial_bregman_state(zero), zero, INNER_TOL).x)
    assert not np.any(auglag_step(initial_auglag_state(zero), zero, INNER_TOL).x)


def test_inner_solver_optimality(problem: BasisPursuitProblem) -> None:
    """Test the subgradient condition of the inner l1 least squares solve."""
    x, iterations = solve_l1_least_squares(problem, np.zeros(50), np.zeros(50), 1e-10)
    assert iterations >= 1
    gradient = matvec_t(problem.a, problem.a @ x - problem.b)
    support = x != 0
    assert np.allclose(gradient[support], -np.sign(x[support]), atol=1e-8)
    assert np.all(np.abs(gradient[~support]) <= 1.0 + 1e-8)


def test_inner_solver_cap(problem: BasisPursuitProblem) -> None:
    """Test the error carrying the achieved accuracy."""
    with pytest.raises(InnerSolverError) as error:
        solve_l1_least_squares(problem, np.zeros(50), np.zeros(50), 1e-14, max_iters=2)
    assert error.value.iterations == 2
    assert error.value.achieved > 1e-14
    with pytest.raises(BregmanInputError):
        solve_l1_least_squares(problem, np.zeros(50), np.zeros(50), 0.0)


def test_run_outer_variants(problem: BasisPursuitProblem) -> None:
    """Test that run drives both outer methods to the same point."""
    config = make_config(problem, max_iters=OUTER_ITERATIONS, inner_tol=INNER_TOL)
    bregman = run(problem, config, Variant.BREGMAN, NeverStop())
    auglag = run(problem, config, Variant.AUGLAG, NeverStop())
    assert bregman.iterations == auglag.iterations == OUTER_ITERATIONS
    assert bregman.solution is not None
    assert auglag.solution is not None
    assert np.max(np.abs(bregman.solution - auglag.solution)) <= 1e-6
    assert bregman.column("g_mu") == [None] * bregman.iterations
