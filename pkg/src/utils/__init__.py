"""Utility modules for the application."""

from .errors import (
    AlterfoldError,
    ContractError,
    DatasetError,
    LabelLookupError,
    PreconditionError,
    ResourceLimitError,
)
from .logger import RunLogger, logger
from .parallel import resolve_jobs, run_sharded

__all__ = [
    "AlterfoldError",
    "ContractError",
    "DatasetError",
    "LabelLookupError",
    "PreconditionError",
    "ResourceLimitError",
    "RunLogger",
    "logger",
    "resolve_jobs",
    "run_sharded",
]
