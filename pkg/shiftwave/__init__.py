# shiftwave/__init__.py

"""
Shiftwave

Simulation and reconstruction toolkit for shifted self-reference phase-shifting
interferometry: a wavefront interferes with laterally shifted copies of itself,
and its phase is recovered by propagating the measured phase differences over
the shift graph, optionally refined by least squares.
"""

from shiftwave.core import ComplexField, PhaseMap, ShiftSet, ShiftVector
from shiftwave.phantoms import PhantomSpec, generate
from shiftwave.forward import NoiseSpec, simulate_shifted
from shiftwave.extract import extract_phasors
from shiftwave.propagate import PhasePropagator
from shiftwave.refine import refine_pipeline
from shiftwave.metrics import phase_error

__version__ = "0.1.0"

__all__ = [
    "ComplexField",
    "NoiseSpec",
    "PhantomSpec",
    "PhasePropagator",
    "PhaseMap",
    "ShiftSet",
    "ShiftVector",
    "extract_phasors",
    "generate",
    "phase_error",
    "refine_pipeline",
    "simulate_shifted",
]
