# shiftwave/optics/__init__.py

"""
Free-space propagation, refocusing and the synthetic diffuser experiment.
"""

from shiftwave.optics.angular_spectrum import (
    correct_known_phase,
    propagate_free_space,
    transfer_function,
)
from shiftwave.optics.diffuser import DiffuserOutcome, diffuser_experiment, diffuser_screen
from shiftwave.optics.models import PROPAGATION_METHODS, PropagationParams, RefocusResult
from shiftwave.optics.refocus import DEFAULT_REFOCUS_PADDING, refocus_sweep, z_range
from shiftwave.optics.sharpness import (
    SHARPNESS_CRITERIA,
    GradientEnergy,
    NormalizedVariance,
    SharpnessCriterion,
    get_criterion,
)

__all__ = [
    "DEFAULT_REFOCUS_PADDING",
    "DiffuserOutcome",
    "GradientEnergy",
    "NormalizedVariance",
    "PROPAGATION_METHODS",
    "PropagationParams",
    "RefocusResult",
    "SHARPNESS_CRITERIA",
    "SharpnessCriterion",
    "correct_known_phase",
    "diffuser_experiment",
    "diffuser_screen",
    "get_criterion",
    "propagate_free_space",
    "refocus_sweep",
    "transfer_function",
    "z_range",
]
