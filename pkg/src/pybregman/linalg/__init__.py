"""Dense linear algebra and seeded sampling."""
from pybregman.linalg.dense import (
    DenseMatrix,
    RealVector,
    SpectralNormEstimate,
    SvdFactors,
    as_matrix,
    as_vector,
    matvec,
    matvec_t,
    spectral_norm_estimate,
    spectral_norm_sq,
    svd,
)
from pybregman.linalg.rng import (
    RNG_ALGORITHM,
    RngStream,
    sample_bernoulli_pm1,
    sample_gaussian,
    sample_uniform_pm1,
)

__all__ = [
    "DenseMatrix",
    "RealVector",
    "SpectralNormEstimate",
    "SvdFactors",
    "as_matrix",
    "as_vector",
    "matvec",
    "matvec_t",
    "spectral_norm_estimate",
    "spectral_norm_sq",
    "svd",
    "RNG_ALGORITHM",
    "RngStream",
    "sample_bernoulli_pm1",
    "sample_gaussian",
    "sample_uniform_pm1",
]
