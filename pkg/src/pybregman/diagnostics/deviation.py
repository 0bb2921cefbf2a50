"""Deviation between iterate sequences and brute-force prox references."""
from __future__ import annotations

import numpy as np
import numpy.typing as npt

from pybregman.linalg import RealVector

DEVIATION_FLOOR = 1e-12
GRID_STEP = 1e-4


def relative_deviation(a: npt.NDArray[np.float64], b: npt.NDArray[np.float64]) -> float:
    """Return ||a - b|| / max(||a||, ||b||), with two zero iterates comparing equal."""
    scale = max(float(np.linalg.norm(a)), float(np.linalg.norm(b)), DEVIATION_FLOOR)
    return float(np.linalg.norm(a - b)) / scale


def max_sequence_deviation(first: list[RealVector], second: list[RealVector]) -> float:
    """Return the largest relative deviation between two iterate sequences."""
    return max(
        (relative_deviation(a, b) for a, b in zip(first, second, strict=True)),
        default=0.0,
    )


def shrink_grid_oracle(z: float, alpha: float, step: float = GRID_STEP) -> float:
    """Minimize alpha |w| + (w - z)^2 / 2 over a grid of spacing step."""
    grid = np.arange(-abs(z) - 1.0, abs(z) + 1.0 + step, step)
    return float(grid[np.argmin(alpha * np.abs(grid) + 0.5 * (grid - z) ** 2)])


def nonneg_grid_oracle(v: float, mu: float, step: float = GRID_STEP) -> float:
    """Minimize w + (w - mu v)^2 / (2 mu) over a grid of w >= 0."""
    grid = np.arange(0.0, mu * (abs(v) + 1.0) + step, step)
    return float(grid[np.argmin(grid + (grid - mu * v) ** 2 / (2.0 * mu))])
