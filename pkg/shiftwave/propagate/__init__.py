# shiftwave/propagate/__init__.py

"""
Phase recovery by propagating difference phasors outward from a reference pixel.
"""

from shiftwave.propagate.averaging import average_pair, average_phasors
from shiftwave.propagate.engines import BfsEngine, PropagationEngine, WavefrontEngine
from shiftwave.propagate.models import (
    AVERAGING_MODES,
    AveragingMode,
    PropagationResult,
)
from shiftwave.propagate.propagator import (
    PhasePropagator,
    propagate_bfs,
    propagate_wavefront,
)

__all__ = [
    "AVERAGING_MODES",
    "AveragingMode",
    "BfsEngine",
    "PhasePropagator",
    "PropagationEngine",
    "PropagationResult",
    "WavefrontEngine",
    "average_pair",
    "average_phasors",
    "propagate_bfs",
    "propagate_wavefront",
]
