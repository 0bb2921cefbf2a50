"""Module containing the generic iterative solver."""

from __future__ import annotations

import logging
from abc import ABC, abstractmethod
from collections.abc import Iterator
from typing import Any, ClassVar, Generic, TypeVar

import numpy as np
import numpy.typing as npt

from pybregman.errors import SolverMismatchError
from pybregman.problems import BasisPursuitProblem, MatrixCompletionProblem
from pybregman.prox import ObjectiveKind

from .models import SolverConfig, Variant

_LOGGER = logging.getLogger(__name__)

StateT = TypeVar("StateT")
Iterate = npt.NDArray[np.float64]


class IterativeSolver(ABC, Generic[StateT]):

    """One solver variant bound to a problem and a configuration.

    Subclasses provide the initial state and one step; iteration, dual
    readout and compatibility checks are shared.
    """

    variant: ClassVar[Variant]
    problem_type: ClassVar[type] = BasisPursuitProblem
    objectives: ClassVar[tuple[ObjectiveKind, ...]] = (ObjectiveKind.L1,)

    def __init__(
        self,
        problem: BasisPursuitProblem | MatrixCompletionProblem,
        config: SolverConfig,
    ) -> None:
        """Bind the solver to a problem.

        Args:
        ----
            problem: BasisPursuitProblem or MatrixCompletionProblem
            config: SolverConfig

        Raises:
        ------
            SolverMismatchError: the problem type or objective does not fit the variant.
        """
        if not isinstance(problem, self.problem_type):
            raise SolverMismatchError(
                f"variant {self.variant.value} does not solve {type(problem).__name__}"
            )
        if config.objective not in self.objectives:
            raise SolverMismatchError(
                f"variant {self.variant.value} does not support objective {config.objective.value}"
            )
        self.problem: Any = problem
        self.config = config

    @abstractmethod
    def initial_state(self) -> StateT:
        """Return the starting state."""
        raise NotImplementedError("Subclass must override.")

    @abstractmethod
    def step(self, state: StateT) -> tuple[StateT, Iterate]:
        """Advance one iteration and return the new state with its primal iterate."""
        raise NotImplementedError("Subclass must override.")

    @abstractmethod
    def primal(self, state: StateT) -> Iterate:
        """Return the primal point represented by a state."""
        raise NotImplementedError("Subclass must override.")

    def dual(self, state: StateT) -> Iterate | None:  # noqa: ARG002
        """Return the multiplier y carried by a state, or None."""
        return None

    def iterate(
        self,
        max_iters: int,
        state: StateT | None = None,
    ) -> Iterator[tuple[StateT, StateT, Iterate]]:
        """Yield (previous state, new state, primal iterate) for up to max_iters steps."""
        current = self.initial_state() if state is None else state
        for _ in range(max_iters):
            previous = current
            current, iterate = self.step(previous)
            yield previous, current, iterate

    def __str__(self) -> str:
        """Represent the solver as a short string."""
        return f"{self.variant.value}[{self.problem}]"
