"""Seeded random streams for instance generation."""

from __future__ import annotations

import numpy as np
import numpy.typing as npt

from pybregman.errors import BregmanInputError

from .dense import DenseMatrix, RealVector

RNG_ALGORITHM = "numpy.PCG64"


class RngStream:

    """A seeded PCG64 stream.

    Identical (algorithm, seed) pairs give identical sample sequences on every
    platform numpy supports. The stream owns its state; each generated
    instance gets its own stream.
    """

    algorithm = RNG_ALGORITHM

    def __init__(self, seed: int) -> None:
        """Init the stream.

        Args:
        ----
            seed: non-negative 64-bit integer
        """
        if seed < 0 or seed >= 2**64:
            raise BregmanInputError(f"seed must be a 64-bit unsigned integer, got {seed}")
        self.seed = seed
        self._generator = np.random.Generator(np.random.PCG64(seed))

    def gaussian(self, size: int | tuple[int, int]) -> npt.NDArray[np.float64]:
        """Draw iid standard normal samples."""
        return self._generator.standard_normal(size)

    def gaussian_matrix(self, rows: int, cols: int) -> DenseMatrix:
        """Draw a rows x cols standard Gaussian matrix, filled row-major."""
        return self._generator.standard_normal((rows, cols))

    def uniform_pm1(self, size: int | tuple[int, int]) -> npt.NDArray[np.float64]:
        """Draw iid samples uniform on [-1, 1) as 2u - 1."""
        return 2.0 * self._generator.random(size) - 1.0

    def uniform_positive(self, size: int) -> RealVector:
        """Draw iid samples uniform on (0, 1] as 1 - u."""
        return 1.0 - self._generator.random(size)

    def bernoulli_pm1(self, size: int | tuple[int, int]) -> npt.NDArray[np.float64]:
        """Draw iid samples equal to -1 or +1 with probability 1/2."""
        bits = self._generator.integers(0, 2, size=size)
        return (2 * bits - 1).astype(np.float64)

    def sample_without_replacement(self, population: int, k: int) -> npt.NDArray[np.int64]:
        """Draw k distinct indices from range(population) by a partial Fisher-Yates shuffle.

        Args:
        ----
            population: int
            k: number of draws, 0 <= k <= population

        Returns:
        -------
            int64 array of length k in draw order
        """
        if k < 0 or k > population:
            raise BregmanInputError(f"cannot draw {k} distinct items from {population}")
        pool = np.arange(population, dtype=np.int64)
        picks = self._generator.integers(np.arange(k), population)
        for i, j in enumerate(picks):
            pool[i], pool[j] = pool[j], pool[i]
        return pool[:k].copy()


def sample_gaussian(rng: RngStream, n: int) -> RealVector:
    """Return n iid standard normal samples from rng."""
    return rng.gaussian(n)


def sample_uniform_pm1(rng: RngStream) -> float:
    """Return one sample uniform on [-1, 1)."""
    return float(rng.uniform_pm1(1)[0])


def sample_bernoulli_pm1(rng: RngStream) -> float:
    """Return one sample from {-1, +1}."""
    return float(rng.bernoulli_pm1(1)[0])
