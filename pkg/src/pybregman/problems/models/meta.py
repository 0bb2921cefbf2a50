"""Generation metadata for problem instances."""
from __future__ import annotations

from enum import Enum

from pydantic import BaseModel, Field

from pybregman.linalg import RNG_ALGORITHM


class MatrixKind(str, Enum):

    """Sensing matrix family."""

    GAUSSIAN = "gaussian"
    NORMALIZED_GAUSSIAN = "normalized-gaussian"
    BERNOULLI = "bernoulli"


class SignalKind(str, Enum):

    """Distribution of the nonzero entries of the sparse signal."""

    GAUSSIAN = "gaussian"
    UNIFORM = "uniform"
    NONNEG_UNIFORM = "nonneg-uniform"


class BpMeta(BaseModel):

    """How a basis pursuit instance was generated.

    # noqa: E800
    # {"matrix_kind": "gaussian", "signal_kind": "uniform",
    #  "n": 2000, "m": 800, "s": 160, "seed": 0, "rng": "numpy.PCG64"}
    """

    matrix_kind: MatrixKind
    signal_kind: SignalKind
    n: int = Field(..., gt=0)
    m: int = Field(..., gt=0)
    s: int = Field(..., gt=0)
    seed: int = Field(..., ge=0)
    rng: str = RNG_ALGORITHM

    class Config:
        allow_mutation = False


class McMeta(BaseModel):

    """How a matrix completion instance was generated."""

    n: int = Field(..., gt=0)
    r: int = Field(..., gt=0)
    p: int = Field(..., gt=0)
    sr: float
    fr: float
    seed: int = Field(..., ge=0)
    rng: str = RNG_ALGORITHM

    class Config:
        allow_mutation = False
