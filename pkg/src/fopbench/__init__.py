"""Numerical experiments on operator-level versus matrix-level preconditioning."""

__version__ = "0.1.0"
