"""Stopping rules."""
from __future__ import annotations

from abc import ABC, abstractmethod

from pybregman.errors import BregmanInputError


class StopRule(ABC):

    """Decide after each iteration whether a run is done."""

    @abstractmethod
    def should_stop(self, residual: float) -> bool:
        """Return True once the run has converged."""
        raise NotImplementedError("Subclass must override.")


class ResidualStop(StopRule):

    """Stop once the residual is strictly below tol."""

    def __init__(self, tol: float) -> None:
        """Initialize with a tolerance in (0, 1)."""
        if not 0.0 < tol < 1.0:
            raise BregmanInputError(f"residual tolerance must lie in (0, 1), got {tol}")
        self.tol = tol

    def should_stop(self, residual: float) -> bool:
        """Return residual < tol."""
        return residual < self.tol

    def __repr__(self) -> str:
        """Represent the rule."""
        return f"ResidualStop({self.tol!r})"


class NeverStop(StopRule):

    """Run for exactly max_iters iterations."""

    def should_stop(self, residual: float) -> bool:  # noqa: ARG002
        """Return False."""
        return False

    def __repr__(self) -> str:
        """Represent the rule."""
        return "NeverStop()"
