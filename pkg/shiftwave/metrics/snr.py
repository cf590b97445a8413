# shiftwave/metrics/snr.py

"""
Empirical signal-to-noise ratio of noisy captures.
"""

import math
from typing import Sequence, Union

import numpy as np

Frames = Union[np.ndarray, Sequence[np.ndarray]]


def _stacked(frames: Frames) -> np.ndarray:
    if isinstance(frames, np.ndarray):
        return frames.astype(np.float64).ravel()
    return np.concatenate([np.asarray(f, dtype=np.float64).ravel() for f in frames])


def empirical_snr(clean: Frames, noisy: Frames) -> float:
    """10*log10(sum clean^2 / sum (noisy - clean)^2) in dB.

    Returns:
        ``math.inf`` when the frames are identical.
    """
    reference = _stacked(clean)
    observed = _stacked(noisy)
    if reference.shape != observed.shape:
        raise ValueError(
            f"Frame size mismatch: {reference.size} clean vs {observed.size} noisy samples"
        )
    noise_power = float(np.sum((observed - reference) ** 2))
    if noise_power == 0.0:
        return math.inf
    signal_power = float(np.sum(reference**2))
    if signal_power == 0.0:
        return -math.inf
    return 10.0 * math.log10(signal_power / noise_power)
