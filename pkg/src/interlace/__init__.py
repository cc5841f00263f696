"""Exact computation of interlace polynomials and their reductions."""

__version__ = "0.1.0"
