"""Command-line entry point."""

from .main import EXIT_FAILED, EXIT_OK, EXIT_USAGE, build_parser, load_dataset, main, run
from .selftest import run_selftest

__all__ = [
    "EXIT_FAILED",
    "EXIT_OK",
    "EXIT_USAGE",
    "build_parser",
    "load_dataset",
    "main",
    "run",
    "run_selftest",
]
