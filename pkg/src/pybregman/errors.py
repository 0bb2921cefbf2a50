"""Exceptions for the Bregman solvers."""

from __future__ import annotations


class BregmanError(Exception):

    """Generic pybregman exception."""


class BregmanInputError(BregmanError):

    """Invalid argument or violated precondition."""


class DimensionMismatchError(BregmanInputError):

    """Operand shapes do not agree."""


class SubgradientError(BregmanInputError):

    """Vector is not a subgradient of the l1 norm at the given point."""

    def __init__(self, message: str, coordinate: int) -> None:
        """Init the exception.

        Args:
        ----
            message: str
            coordinate: index of the first offending coordinate
        """
        super().__init__(message)
        self.coordinate = coordinate


class SolverMismatchError(BregmanInputError):

    """Solver variant does not apply to this problem or objective."""


class BregmanNumericalError(BregmanError):

    """A numerical kernel failed to converge."""


class InnerSolverError(BregmanNumericalError):

    """Inner proximal-gradient loop exhausted its iteration cap."""

    def __init__(self, message: str, achieved: float, iterations: int) -> None:
        """Init the exception.

        Args:
        ----
            message: str
            achieved: gradient-map norm reached when the loop stopped
            iterations: inner iterations performed
        """
        super().__init__(message)
        self.achieved = achieved
        self.iterations = iterations


class ReferenceQualityError(BregmanError):

    """Reference optimum is worse than an iterate it is compared with."""


class InstanceFormatError(BregmanError):

    """Instance file is unreadable or corrupt."""
