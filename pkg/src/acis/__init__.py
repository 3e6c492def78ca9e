"""Exact computations around the Gorenstein duality of Jacobian modules."""

__version__ = "0.1.0"
