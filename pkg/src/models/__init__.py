"""Data models module."""

from .reports import (
    CalibrationReport,
    CalibrationRow,
    Evaluation,
    GramReport,
    MednykhReport,
    PachnerFailure,
    PachnerReport,
    SelftestReport,
    SuiteResult,
    ValidationReport,
    format_move,
    format_value,
)

__all__ = [
    "CalibrationReport",
    "CalibrationRow",
    "Evaluation",
    "GramReport",
    "MednykhReport",
    "PachnerFailure",
    "PachnerReport",
    "SelftestReport",
    "SuiteResult",
    "ValidationReport",
    "format_move",
    "format_value",
]
