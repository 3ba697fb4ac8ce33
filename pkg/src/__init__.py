"""Exact state sums, Pachner-move verification and surface calculus for alterfold TQFTs."""

__version__ = "1.0.0"
