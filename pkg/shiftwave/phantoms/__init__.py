# shiftwave/phantoms/__init__.py

"""
Ground-truth phantoms for synthetic experiments.
"""

from shiftwave.io.pgm import load_intensity
from shiftwave.phantoms.generator import PhantomGenerator, generate
from shiftwave.phantoms.models import UNIFORM_AMPLITUDE, Phantom, PhantomSpec
from shiftwave.phantoms.profiles import peaks_surface

__all__ = [
    "Phantom",
    "PhantomGenerator",
    "PhantomSpec",
    "UNIFORM_AMPLITUDE",
    "generate",
    "load_intensity",
    "peaks_surface",
]
