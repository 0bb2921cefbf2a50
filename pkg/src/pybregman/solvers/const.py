"""Defaults for the Bregman solvers."""
from __future__ import annotations

# compressed sensing experiments
CS_MU = 5.0
CS_RESIDUAL_TOL = 1e-5
CS_MAX_ITERS = 5000

# matrix completion experiments: mu = 5 n, tau = 1 / mu
MC_MU_PER_DIM = 5.0
MC_RESIDUAL_TOL = 1e-4
MC_MAX_ITERS = 2000

DEFAULT_INNER_TOL = 1e-10
DEFAULT_INNER_MAX_ITERS = 1_000_000
