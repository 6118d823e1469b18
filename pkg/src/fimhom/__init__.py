"""Exact computations with representations of truncations of FI^m."""

__version__ = "0.1.0"
