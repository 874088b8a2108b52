"""Feasibility and p-adic nonexistence tests for quasi-symmetric 2-designs."""

__version__ = "0.1.0"
