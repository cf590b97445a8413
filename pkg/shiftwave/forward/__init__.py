# shiftwave/forward/__init__.py

"""
Forward simulation of phase-shifting captures and their noise.
"""

from shiftwave.forward.models import (
    NOISE_MODELS,
    QUADRATURES,
    MeasurementStack,
    NoiseCalibration,
    NoiseSpec,
    PointReferenceFrames,
)
from shiftwave.forward.noise import apply_noise, calibrate_noise, expected_snr_db
from shiftwave.forward.simulator import (
    QUADRATURE_PHASORS,
    clean_shifted_frames,
    frame_rng,
    simulate_point_reference,
    simulate_shifted,
)

__all__ = [
    "MeasurementStack",
    "NOISE_MODELS",
    "NoiseCalibration",
    "NoiseSpec",
    "PointReferenceFrames",
    "QUADRATURES",
    "QUADRATURE_PHASORS",
    "apply_noise",
    "calibrate_noise",
    "clean_shifted_frames",
    "expected_snr_db",
    "frame_rng",
    "simulate_point_reference",
    "simulate_shifted",
]
