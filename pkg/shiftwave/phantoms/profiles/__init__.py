# shiftwave/phantoms/profiles/__init__.py

"""
Phase profiles available to the phantom generator.
"""

from shiftwave.phantoms.profiles.analytic import (
    FlatProfile,
    LensProfile,
    PeaksProfile,
    QuadraticProfile,
    peaks_surface,
)
from shiftwave.phantoms.profiles.base import PhaseProfile
from shiftwave.phantoms.profiles.random_phase import RandomProfile

__all__ = [
    "FlatProfile",
    "LensProfile",
    "PeaksProfile",
    "PhaseProfile",
    "QuadraticProfile",
    "RandomProfile",
    "peaks_surface",
]
