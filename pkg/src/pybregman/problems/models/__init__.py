"""Init file for the models."""
from pybregman.problems.models.meta import BpMeta, MatrixKind, McMeta, SignalKind
from pybregman.problems.models.problem import BasisPursuitProblem, MatrixCompletionProblem

__all__ = [
    "BasisPursuitProblem",
    "BpMeta",
    "MatrixCompletionProblem",
    "MatrixKind",
    "McMeta",
    "SignalKind",
]
