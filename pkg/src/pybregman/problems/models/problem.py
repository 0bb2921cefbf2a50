"""Problem instances for basis pursuit and matrix completion."""
from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property

import numpy as np
import numpy.typing as npt

from pybregman.linalg import DenseMatrix, RealVector, spectral_norm_sq

from .meta import BpMeta, McMeta


@dataclass(frozen=True, eq=False)
class BasisPursuitProblem:

    """min ||x||_1 subject to a @ x = b.

    x_true is the generating sparse signal when known.
    """

    a: DenseMatrix
    b: RealVector
    x_true: RealVector | None = None
    meta: BpMeta | None = None

    @property
    def shape(self) -> tuple[int, int]:
        """Return (m, n)."""
        return self.a.shape[0], self.a.shape[1]

    @cached_property
    def norm_a_sq(self) -> float:
        """Return ||a||^2, computed once per instance."""
        return spectral_norm_sq(self.a)

    @cached_property
    def norm_b(self) -> float:
        """Return ||b||."""
        return float(np.linalg.norm(self.b))

    def __str__(self) -> str:
        """Represent the instance as a short string."""
        m, n = self.shape
        return f"bp_{m}x{n}"


@dataclass(frozen=True, eq=False)
class MatrixCompletionProblem:

    """min ||X||_* subject to P_omega(X) = P_omega(M) for an n x n matrix.

    omega is an int64 array of (row, col) pairs and observed holds M on omega.
    """

    n: int
    r: int
    omega: npt.NDArray[np.int64]
    observed: RealVector
    m_true: DenseMatrix | None = None
    meta: McMeta | None = None

    @property
    def p(self) -> int:
        """Return the number of observed entries."""
        return int(self.omega.shape[0])

    @property
    def sr(self) -> float:
        """Return the sampling ratio p / n^2."""
        return self.p / self.n**2

    @property
    def fr(self) -> float:
        """Return the degrees-of-freedom ratio r(2n - r) / p."""
        return self.r * (2 * self.n - self.r) / self.p

    @cached_property
    def mask(self) -> npt.NDArray[np.bool_]:
        """Return the boolean n x n indicator of omega."""
        mask = np.zeros((self.n, self.n), dtype=bool)
        mask[self.omega[:, 0], self.omega[:, 1]] = True
        return mask

    @cached_property
    def observed_matrix(self) -> DenseMatrix:
        """Return P_omega(M) as a dense n x n matrix."""
        matrix = np.zeros((self.n, self.n))
        matrix[self.omega[:, 0], self.omega[:, 1]] = self.observed
        return matrix

    @cached_property
    def norm_observed(self) -> float:
        """Return ||P_omega(M)||_F."""
        return float(np.linalg.norm(self.observed))

    def project(self, x: DenseMatrix) -> DenseMatrix:
        """Return P_omega(x)."""
        return np.where(self.mask, x, 0.0)

    def __str__(self) -> str:
        """Represent the instance as a short string."""
        return f"mc_{self.n}_r{self.r}_p{self.p}"
