"""Proximal and shrinkage operators."""
from pybregman.prox.objective import ObjectiveKind, objective_value
from pybregman.prox.operators import (
    SUBGRADIENT_TOL,
    bregman_distance_l1,
    prox_l1_nonneg,
    prox_objective,
    shrink_matrix,
    shrink_vec,
)

__all__ = [
    "ObjectiveKind",
    "objective_value",
    "SUBGRADIENT_TOL",
    "bregman_distance_l1",
    "prox_l1_nonneg",
    "prox_objective",
    "shrink_matrix",
    "shrink_vec",
]
