# shiftwave/experiments/__init__.py

"""
Experiment configuration and the single-seed pipeline.
"""

from shiftwave.experiments.models import ExperimentConfig, RunOutcome
from shiftwave.experiments.pipeline import error_status, run_seed

__all__ = [
    "ExperimentConfig",
    "RunOutcome",
    "error_status",
    "run_seed",
]
