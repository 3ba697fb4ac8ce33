"""Spherical category data and the bundled datasets."""

from .bundled import load_ising3, load_semisimple1
from .category_data import (
    CategoryData,
    ClosureConflict,
    FRow,
    admissible,
    fsymbol,
    globaldim,
    trace,
)
from .completion import complete_rows
from .dataset_text import parse_dataset
from .labels import Label, OrderedLabeledSimplex
from .symmetry import SymmetryAction, permuted_key
from .validation import validate

__all__ = [
    "CategoryData",
    "ClosureConflict",
    "FRow",
    "Label",
    "OrderedLabeledSimplex",
    "SymmetryAction",
    "admissible",
    "complete_rows",
    "fsymbol",
    "globaldim",
    "load_ising3",
    "load_semisimple1",
    "parse_dataset",
    "permuted_key",
    "trace",
    "validate",
]
