"""Mednykh's formula for finite groups, by brute force and by state sum."""

from .formula import (
    conjugacy_classes,
    count_homs,
    count_homs_brute,
    euler_of_genus,
    hom_side,
    mednykh_check,
    mednykh_report,
    state_sum_side,
    triangulated_check,
)
from .groups import GroupTable, IrrepDims, bundled_groups, parse_group

__all__ = [
    "GroupTable",
    "IrrepDims",
    "bundled_groups",
    "conjugacy_classes",
    "count_homs",
    "count_homs_brute",
    "euler_of_genus",
    "hom_side",
    "mednykh_check",
    "mednykh_report",
    "parse_group",
    "state_sum_side",
    "triangulated_check",
]
