# shiftwave/forward/simulator.py

"""
Forward models for phase-shifting captures.

Shifted self-interference pairs each pixel i with pixel i + delta: frame
(k, q) is |x + e^{j pi q / 2} S_k(x)|^2 where S_k(x)(i) = x(i + delta_k).
"""

import logging
from typing import Dict, List, Optional, Tuple

import numpy as np

from shiftwave.core import (
    BoundaryMode,
    ComplexField,
    ShiftSet,
    ZeroReferenceError,
    centered_reference,
    shift_ahead,
)
from shiftwave.forward.models import (
    QUADRATURES,
    MeasurementStack,
    NoiseSpec,
    PointReferenceFrames,
)
from shiftwave.forward.noise import apply_noise, calibrate_noise
from shiftwave.metrics.snr import empirical_snr

logger = logging.getLogger(__name__)

# e^{j pi q / 2} for q = 0..3, exact
QUADRATURE_PHASORS = np.array([1.0, 1.0j, -1.0, -1.0j], dtype=np.complex128)

_TAG_SHIFTED = 1
_TAG_AMPLITUDE = 2
_TAG_POINT = 3


def frame_rng(seed: int, *key: int) -> np.random.Generator:
    """Independent noise stream for one capture, derived from (seed, key)."""
    return np.random.default_rng([int(seed), *[int(k) for k in key]])


def clean_shifted_frames(
    x: ComplexField, shifts: ShiftSet, mode: BoundaryMode = "circular"
) -> Dict[Tuple[int, int], np.ndarray]:
    """Noiseless frames |x + e^{j pi q/2} S_k(x)|^2 for every (k, q)."""
    shifts.validate_for(x.shape)
    frames: Dict[Tuple[int, int], np.ndarray] = {}
    for k, delta in enumerate(shifts):
        copy = shift_ahead(x, delta, mode)
        for q in range(QUADRATURES):
            frames[(k, q)] = np.abs(x.data + QUADRATURE_PHASORS[q] * copy) ** 2
    return frames


def simulate_shifted(
    x: ComplexField,
    shifts: ShiftSet,
    noise: Optional[NoiseSpec] = None,
    mode: BoundaryMode = "circular",
) -> MeasurementStack:
    """Simulate the shifted self-interference stack of ``x``.

    Args:
        x: Complex field at the sensor.
        shifts: Shift vectors; each must fit the grid.
        noise: Noise model, calibrated once over all captures of the stack.
        mode: Boundary behaviour of the shifted copy.

    Returns:
        Frames for every (k, q), the |x|^2 amplitude capture and the achieved SNR.

    Raises:
        InvalidShiftError: A shift does not fit the grid.
        NoiseCalibrationError: The noise model cannot be calibrated.
    """
    noise = noise or NoiseSpec()
    clean = clean_shifted_frames(x, shifts, mode)
    clean_amplitude = np.abs(x.data) ** 2

    keys = sorted(clean)
    calibration = calibrate_noise([clean[key] for key in keys] + [clean_amplitude], noise)
    noisy = {
        (k, q): apply_noise(
            clean[(k, q)], noise, frame_rng(noise.rng_seed, _TAG_SHIFTED, k, q), calibration
        )
        for k, q in keys
    }
    amplitude = apply_noise(
        clean_amplitude, noise, frame_rng(noise.rng_seed, _TAG_AMPLITUDE), calibration
    )

    clean_all: List[np.ndarray] = [clean[key] for key in keys] + [clean_amplitude]
    noisy_all: List[np.ndarray] = [noisy[key] for key in keys] + [amplitude]
    achieved = empirical_snr(clean_all, noisy_all)
    if noise.model != "none":
        logger.debug(
            "Stack of %d frames: target %.2f dB, achieved %.2f dB",
            len(noisy_all),
            noise.target_snr_db,
            achieved,
        )
    return MeasurementStack(
        frames=noisy,
        amplitude_frame=amplitude,
        shifts=shifts,
        noise=noise,
        achieved_snr_db=achieved,
        boundary=mode,
    )


def simulate_point_reference(
    x: ComplexField,
    noise: Optional[NoiseSpec] = None,
    reference: Optional[Tuple[int, int]] = None,
) -> PointReferenceFrames:
    """Simulate four captures of x against its own bright reference pixel.

    The global phase is fixed so x(reference) is real positive; the frames
    are |x + |x(0)| e^{j pi q/2}|^2.

    Raises:
        ZeroReferenceError: The reference pixel has zero amplitude.
    """
    noise = noise or NoiseSpec()
    reference = reference or centered_reference(x.shape)
    x0 = x.data[reference]
    amplitude = float(abs(x0))
    if amplitude == 0.0:
        raise ZeroReferenceError(f"Invalid reference pixel {reference}: zero amplitude")
    gauged = x.data * np.conj(x0) / amplitude

    clean = {q: np.abs(gauged + amplitude * QUADRATURE_PHASORS[q]) ** 2 for q in range(QUADRATURES)}
    calibration = calibrate_noise([clean[q] for q in range(QUADRATURES)], noise)
    frames = {
        q: apply_noise(clean[q], noise, frame_rng(noise.rng_seed, _TAG_POINT, q), calibration)
        for q in range(QUADRATURES)
    }
    achieved = empirical_snr(
        [clean[q] for q in range(QUADRATURES)], [frames[q] for q in range(QUADRATURES)]
    )
    return PointReferenceFrames(
        frames=frames,
        reference=reference,
        reference_amplitude=amplitude,
        achieved_snr_db=achieved,
        calibration=calibration,
    )
