# shiftwave/refine/__init__.py

"""
Least-squares refinement of propagated phase maps.
"""

from shiftwave.refine.least_squares import (
    DEFAULT_LAMBDA,
    difference,
    difference_filter,
    lambda_sweep,
    refine_ls,
    refine_pipeline,
    solve_ls,
    unwrap_differences,
)
from shiftwave.refine.models import RefinedPhase, UnwrappedDifferences

__all__ = [
    "DEFAULT_LAMBDA",
    "RefinedPhase",
    "UnwrappedDifferences",
    "difference",
    "difference_filter",
    "lambda_sweep",
    "refine_ls",
    "refine_pipeline",
    "solve_ls",
    "unwrap_differences",
]
