"""Tests for pybregman."""
