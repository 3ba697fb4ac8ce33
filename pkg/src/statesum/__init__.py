"""State-sum partition functions of colored triangulations."""

from ..models.reports import Evaluation
from .coloring import Coloring, coloring_from_key
from .evaluator import (
    GroupedSums,
    enumerate_boundary_sums,
    evaluate,
    evaluate_grouped,
    evaluate_naive,
    evaluate_sharded,
)

__all__ = [
    "Coloring",
    "Evaluation",
    "GroupedSums",
    "coloring_from_key",
    "enumerate_boundary_sums",
    "evaluate",
    "evaluate_grouped",
    "evaluate_naive",
    "evaluate_sharded",
]
