# shiftwave/extract/demodulation.py

"""
Quadrature demodulation of measurement stacks and the point-reference
closed-form reconstruction.
"""

import logging
from typing import Dict, Mapping, Optional, Union

import numpy as np

from shiftwave.core import (
    ComplexField,
    ExtractionError,
    ZeroReferenceError,
    validity_mask,
)
from shiftwave.extract.models import PhasorGrid
from shiftwave.forward.models import QUADRATURES, MeasurementStack, PointReferenceFrames
from shiftwave.forward.simulator import QUADRATURE_PHASORS

logger = logging.getLogger(__name__)

DEFAULT_RELIABILITY_FLOOR = 0.02


def demodulate(frames: Mapping[int, np.ndarray]) -> np.ndarray:
    """sum_q y_q e^{j pi q / 2} over the four quadrature frames."""
    total = np.zeros(np.shape(frames[0]), dtype=np.complex128)
    for q in range(QUADRATURES):
        total += QUADRATURE_PHASORS[q] * np.asarray(frames[q], dtype=np.float64)
    return total


def extract_phasors(
    stack: MeasurementStack, reliability_floor: float = DEFAULT_RELIABILITY_FLOOR
) -> PhasorGrid:
    """Demodulate every shift of ``stack`` into unit phase-difference phasors.

    Args:
        stack: Measurement stack with four quadratures per shift.
        reliability_floor: Pixels whose demodulated magnitude is below this
            fraction of the median (over non-wrapping pixels) are dropped.
            0 keeps every pixel with a nonzero magnitude.

    Returns:
        PhasorGrid with wrap-around and unreliable pixels masked out.

    Raises:
        ExtractionError: A quadrature frame is missing or the floor is negative.
    """
    if reliability_floor < 0:
        raise ExtractionError(f"Invalid reliability floor: {reliability_floor}")
    missing = stack.missing_frames()
    if missing:
        raise ExtractionError(f"Missing quadrature frames: {missing}")

    phasors, masks, reliability = [], [], []
    for k, delta in enumerate(stack.shifts):
        total = demodulate({q: stack.frames[(k, q)] for q in range(QUADRATURES)})
        magnitude = np.abs(total)
        mask = validity_mask(stack.shape, delta) & (magnitude > 0)
        if reliability_floor > 0 and np.any(mask):
            threshold = reliability_floor * float(np.median(magnitude[mask]))
            mask &= magnitude >= threshold
        unit = np.zeros_like(total)
        unit[mask] = total[mask] / magnitude[mask]
        phasors.append(unit)
        masks.append(mask)
        reliability.append(magnitude)
        logger.debug("Shift %s: %d valid edges", delta, int(mask.sum()))
    return PhasorGrid(
        shifts=stack.shifts, phasors=phasors, masks=masks, reliability=reliability
    )


def reconstruct_point_reference(
    frames: Union[PointReferenceFrames, Mapping[int, np.ndarray]],
    reference_amplitude: Optional[float] = None,
) -> ComplexField:
    """Closed form x = sum_q y_q e^{j phi_q} / (4 |x(0)|).

    Args:
        frames: PointReferenceFrames, or a quadrature -> grid mapping.
        reference_amplitude: |x(0)|; taken from ``frames`` when omitted.

    Raises:
        ZeroReferenceError: The reference amplitude is not positive.
    """
    if isinstance(frames, PointReferenceFrames):
        if reference_amplitude is None:
            reference_amplitude = frames.reference_amplitude
        grids: Dict[int, np.ndarray] = dict(frames.frames)
    else:
        grids = dict(frames)
    if reference_amplitude is None or not reference_amplitude > 0:
        raise ZeroReferenceError(f"Invalid reference amplitude: {reference_amplitude}")
    if any(q not in grids for q in range(QUADRATURES)):
        raise ExtractionError(f"Missing quadrature frames: have {sorted(grids)}")
    return ComplexField(demodulate(grids) / (4.0 * reference_amplitude))


def recover_amplitude(stack: MeasurementStack) -> np.ndarray:
    """|x| from the unshifted capture, with negative noise excursions zeroed."""
    return np.sqrt(np.maximum(np.asarray(stack.amplitude_frame, dtype=np.float64), 0.0))
