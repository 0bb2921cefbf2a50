"""Test step-length rules, extrapolation weights and solver configuration."""
from __future__ import annotations

import pytest
from pydantic import ValidationError

from pybregman.errors import BregmanInputError
from pybregman.solvers import ScheduleKind, SolverConfig, TauRule, alpha, default_tau, theta


def test_theta_values() -> None:
    """Test theta_{-1} = 1 and theta_k = 2 / (k + 2)."""
    assert theta(-1) == 1.0
    assert theta(0) == 1.0
    assert theta(1) == pytest.approx(2.0 / 3.0)
    with pytest.raises(BregmanInputError):
        theta(-2)


def test_alpha_values() -> None:
    """Test alpha_k = (2k + 3) / (k + 3)."""
    assert alpha(0) == 1.0
    assert alpha(1) == pytest.approx(1.25)
    for k in range(50):
        assert alpha(k) == pytest.approx((2 * k + 3) / (k + 3), rel=1e-14)
        assert 1.0 <= alpha(k) < 2.0
    with pytest.raises(BregmanInputError):
        alpha(-1)


@pytest.mark.parametrize(
    ("rule", "mu", "norm_a_sq", "expected"),
    [
        (TauRule.PAPER_CS, 5.0, 4.0, 0.1),
        (TauRule.THEORY_SAFE, 5.0, 4.0, 0.05),
        (TauRule.PAPER_MC, 500.0, 1.0, 0.002),
    ],
)
def test_default_tau(rule: TauRule, mu: float, norm_a_sq: float, expected: float) -> None:
    """Test the three step-length rules."""
    assert default_tau(rule, mu, norm_a_sq) == pytest.approx(expected)


def test_default_tau_rejects_non_positive() -> None:
    """Test the mu and ||A||^2 preconditions."""
    with pytest.raises(BregmanInputError):
        default_tau(TauRule.PAPER_CS, 0.0, 1.0)
    with pytest.raises(BregmanInputError):
        default_tau(TauRule.THEORY_SAFE, 1.0, 0.0)


@pytest.mark.parametrize(
    ("text", "expected"),
    [
        ("tseng", ScheduleKind()),
        ("constant:1", ScheduleKind(tag="constant", alpha=1.0)),
        (" constant:0.5 ", ScheduleKind(tag="constant", alpha=0.5)),
    ],
)
def test_schedule_parse(text: str, expected: ScheduleKind) -> None:
    """Test the command-line schedule syntax."""
    assert ScheduleKind.parse_spec(text) == expected


@pytest.mark.parametrize(
    "text",
    ["", "tseng:2", "constant", "constant:x", "constant:0", "nesterov"],
)
def test_schedule_parse_rejects(text: str) -> None:
    """Test malformed schedules."""
    with pytest.raises(BregmanInputError):
        ScheduleKind.parse_spec(text)


def test_schedule_alpha() -> None:
    """Test the weights produced by both schedules."""
    assert ScheduleKind().alpha_at(1) == pytest.approx(1.25)
    constant = ScheduleKind(tag="constant", alpha=1.0)
    assert [constant.alpha_at(k) for k in range(3)] == [1.0, 1.0, 1.0]
    assert str(constant) == "constant:1.0"
    assert str(ScheduleKind()) == "tseng"
    with pytest.raises(ValidationError):
        ScheduleKind(tag="constant", alpha=2.5)
    with pytest.raises(ValidationError):
        ScheduleKind(tag="tseng", alpha=1.0)


def test_solver_config_validation() -> None:
    """Test the positivity and range constraints."""
    config = SolverConfig(mu=5.0, tau=0.1, max_iters=10, residual_tol=1e-5)
    assert config.schedule == ScheduleKind()
    snapshot = config.snapshot()
    assert snapshot["schedule"] == "tseng"
    assert snapshot["objective"] == "l1"
    assert snapshot["tau_rule"] is None
    with pytest.raises(ValidationError):
        SolverConfig(mu=0.0, tau=0.1, max_iters=10, residual_tol=1e-5)
    with pytest.raises(ValidationError):
        SolverConfig(mu=5.0, tau=0.1, max_iters=0, residual_tol=1e-5)
    with pytest.raises(ValidationError):
        SolverConfig(mu=5.0, tau=0.1, max_iters=10, residual_tol=1.0)
    with pytest.raises(TypeError):
        config.mu = 1.0  # type: ignore[misc]
