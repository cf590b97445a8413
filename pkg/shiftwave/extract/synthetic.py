# shiftwave/extract/synthetic.py

"""
Phasor grids synthesized straight from a known phase, with i.i.d. angle noise
on every edge. Used to study error accumulation along hops without going
through the optical forward model.
"""

from typing import Optional

import numpy as np
from typing_extensions import Literal

from shiftwave.core import PhaseMap, ShiftSet, shift_ahead, validity_mask
from shiftwave.extract.models import PhasorGrid

AngleNoise = Literal["gaussian", "vonmises"]


def angle_noise(
    shape: tuple, sigma: float, rng: np.random.Generator, distribution: AngleNoise
) -> np.ndarray:
    """I.i.d. angle perturbations; von Mises uses kappa = 1 / sigma^2."""
    if sigma <= 0:
        return np.zeros(shape)
    if distribution == "gaussian":
        return rng.normal(0.0, sigma, size=shape)
    if distribution == "vonmises":
        return rng.vonmises(0.0, 1.0 / sigma**2, size=shape)
    raise ValueError(f"Unsupported angle noise: {distribution}")


def synthetic_phasors(
    truth: PhaseMap,
    shifts: ShiftSet,
    sigma: float = 0.0,
    rng: Optional[np.random.Generator] = None,
    distribution: AngleNoise = "gaussian",
) -> PhasorGrid:
    """Exact difference phasors e^{j(phi(i) - phi(i + delta))} plus angle noise.

    Args:
        truth: Ground-truth phase.
        shifts: Shift vectors; wrap-around pairs are masked.
        sigma: Noise scale in radians.
        rng: Generator for the noise (required when sigma > 0).
        distribution: ``gaussian`` or ``vonmises``.
    """
    if sigma > 0 and rng is None:
        raise ValueError("A random generator is required when sigma > 0")
    shifts.validate_for(truth.shape)
    phasors, masks, reliability = [], [], []
    for delta in shifts:
        mask = validity_mask(truth.shape, delta)
        difference = truth.data - shift_ahead(truth.data, delta)
        if sigma > 0:
            difference = difference + angle_noise(truth.shape, sigma, rng, distribution)
        phasors.append(np.where(mask, np.exp(1j * difference), 0))
        masks.append(mask)
        reliability.append(mask.astype(np.float64))
    return PhasorGrid(shifts=shifts, phasors=phasors, masks=masks, reliability=reliability)
