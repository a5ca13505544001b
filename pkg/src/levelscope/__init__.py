"""Levels of polynomials over prime fields and Cartier-Manin classification
of hyperelliptic curves."""

__version__ = "0.1.0"
