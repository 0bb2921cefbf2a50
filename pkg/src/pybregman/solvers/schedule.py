"""Step-length rules and the extrapolation schedule of the accelerated methods."""
from __future__ import annotations

from enum import Enum

from pybregman.errors import BregmanInputError


class TauRule(str, Enum):

    """How the step length tau is derived from mu and ||A||^2."""

    PAPER_CS = "paper-cs"
    THEORY_SAFE = "theory-safe"
    PAPER_MC = "paper-mc"


def theta(k: int) -> float:
    """Return theta_k: theta_{-1} = 1 and theta_k = 2 / (k + 2) for k >= 0.

    Raises
    ------
        BregmanInputError: k < -1.
    """
    if k < -1:
        raise BregmanInputError(f"theta is defined for k >= -1, got {k}")
    if k == -1:
        return 1.0
    return 2.0 / (k + 2)


def alpha(k: int) -> float:
    """Return alpha_k = 1 + theta_{k+1} (1 / theta_k - 1), i.e. (2k + 3) / (k + 3).

    Raises
    ------
        BregmanInputError: k < 0.
    """
    if k < 0:
        raise BregmanInputError(f"alpha is defined for k >= 0, got {k}")
    return 1.0 + theta(k + 1) * (1.0 / theta(k) - 1.0)


def default_tau(rule: TauRule, mu: float, norm_a_sq: float = 1.0) -> float:
    """Return the step length tau for a rule.

    PAPER_CS: 2 / (mu ||A||^2). THEORY_SAFE: 1 / (mu ||A||^2). PAPER_MC: 1 / mu.

    Args:
    ----
        rule: TauRule
        mu: float, > 0
        norm_a_sq: ||A||^2, > 0 (unused by PAPER_MC)

    Returns:
    -------
        float
    """
    if mu <= 0 or norm_a_sq <= 0:
        raise BregmanInputError(f"need mu > 0 and ||A||^2 > 0, got {mu}, {norm_a_sq}")
    rule = TauRule(rule)
    if rule is TauRule.PAPER_CS:
        return 2.0 / (mu * norm_a_sq)
    if rule is TauRule.THEORY_SAFE:
        return 1.0 / (mu * norm_a_sq)
    return 1.0 / mu
