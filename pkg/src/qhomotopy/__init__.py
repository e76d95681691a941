"""Homotopy polynomials of links via graph polynomials, plus the q-Lie machinery."""

__version__ = "0.1.0"
