"""Pachner-move equations for a category dataset."""

from .equations import (
    ConeBreakdown,
    ConeGroup,
    EquationCount,
    PachnerEquation,
    calibrate_symmetry,
    compare_complementary,
    cone_breakdown,
    count_equations,
    generate,
    sampled_boundaries,
    side_triangulations,
    split_for,
    spot_check,
    verify,
)

__all__ = [
    "ConeBreakdown",
    "ConeGroup",
    "EquationCount",
    "PachnerEquation",
    "calibrate_symmetry",
    "compare_complementary",
    "cone_breakdown",
    "count_equations",
    "generate",
    "sampled_boundaries",
    "side_triangulations",
    "split_for",
    "spot_check",
    "verify",
]
