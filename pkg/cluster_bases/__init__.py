"""Exact classical and quantum cluster-algebra computations."""

__version__ = "0.1.0"
