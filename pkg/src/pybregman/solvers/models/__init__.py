"""Init file for the models."""
from pybregman.solvers.models.config import McShrinkArg, ScheduleKind, SolverConfig, Variant
from pybregman.solvers.models.state import (
    AccelDualState,
    AlbState,
    AlbVState,
    AugLagState,
    DualState,
    LbPrimalState,
    McDualState,
    McState,
    VState,
)

__all__ = [
    "McShrinkArg",
    "ScheduleKind",
    "SolverConfig",
    "Variant",
    "AccelDualState",
    "AlbState",
    "AlbVState",
    "AugLagState",
    "DualState",
    "LbPrimalState",
    "McDualState",
    "McState",
    "VState",
]
