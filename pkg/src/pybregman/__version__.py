"""Linearized Bregman solvers for sparse and low-rank recovery."""

__version__ = "0.1.0"
