# shiftwave/extract/__init__.py

"""
From intensity captures to phase-difference phasors.
"""

from shiftwave.extract.demodulation import (
    DEFAULT_RELIABILITY_FLOOR,
    demodulate,
    extract_phasors,
    reconstruct_point_reference,
    recover_amplitude,
)
from shiftwave.extract.models import PhasorGrid
from shiftwave.extract.synthetic import angle_noise, synthetic_phasors

__all__ = [
    "DEFAULT_RELIABILITY_FLOOR",
    "PhasorGrid",
    "angle_noise",
    "demodulate",
    "extract_phasors",
    "reconstruct_point_reference",
    "recover_amplitude",
    "synthetic_phasors",
]
