"""Exact and randomized verification of sharp Hankel determinant bounds."""

__version__ = "0.1.0"
