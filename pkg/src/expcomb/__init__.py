"""Exact experimental-mathematics toolkit: recurrence guessing, spanning-tree
generating functions, almost-diagonal determinants, parking-function and
Quicksort moments, and peaceable-queens configurations."""

from .exact import Poly, RatFunc, series_coeffs

__all__ = ["Poly", "RatFunc", "series_coeffs"]
__version__ = "0.1.0"
