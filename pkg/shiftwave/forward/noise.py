# shiftwave/forward/noise.py

"""
Noise calibration and injection.

SNR is 10*log10(sum y^2 / sum (y_noisy - y)^2) over every captured pixel. The
gaussian model solves its sigma in closed form; the joint poisson+gaussian
model fixes the read sigma from the mean intensity and bisects the photon
scale gamma so the expected SNR hits the target.
"""

import logging
import math
from typing import Optional, Sequence, Tuple

import numpy as np

from shiftwave.core import NoiseCalibrationError
from shiftwave.forward.models import NoiseCalibration, NoiseSpec

logger = logging.getLogger(__name__)

PHOTON_SCALE_BRACKET: Tuple[float, float] = (1e-3, 1e12)
BISECTION_STEPS = 60


def _signal_stats(frames: Sequence[np.ndarray]) -> Tuple[float, float, int]:
    """Return (sum y^2, sum y, pixel count) over all frames."""
    power = 0.0
    total = 0.0
    count = 0
    for frame in frames:
        values = np.asarray(frame, dtype=np.float64)
        if np.any(values < 0):
            raise NoiseCalibrationError("Invalid frame: intensities must be nonnegative")
        power += float(np.sum(values**2))
        total += float(np.sum(values))
        count += values.size
    return power, total, count


def expected_snr_db(
    power: float, total: float, count: int, photon_scale: float, read_sigma: float
) -> float:
    """Expected SNR for Poisson(gamma y)/gamma plus N(0, read_sigma^2) noise."""
    noise = total / photon_scale + count * read_sigma**2
    if noise <= 0:
        return math.inf
    return 10.0 * math.log10(power / noise)


def calibrate_noise(frames: Sequence[np.ndarray], noise: NoiseSpec) -> NoiseCalibration:
    """Solve the noise parameters that reach ``noise.target_snr_db`` over ``frames``.

    Args:
        frames: Clean, nonnegative intensity grids sharing one calibration.
        noise: Noise specification.

    Returns:
        The calibration to pass to ``apply_noise``.

    Raises:
        NoiseCalibrationError: Negative intensities, frames without signal
            (nonpositive photon scaling) or a read-noise floor above the target.
    """
    if noise.model == "none":
        return NoiseCalibration(model="none")

    power, total, count = _signal_stats(frames)
    if power <= 0 or count == 0:
        raise NoiseCalibrationError(
            "Nonpositive photon scaling: frames carry no signal to calibrate against"
        )
    target_noise = power / 10.0 ** (noise.target_snr_db / 10.0)

    if noise.model == "gaussian":
        sigma = math.sqrt(target_noise / count)
        return NoiseCalibration(
            model="gaussian", read_sigma=sigma, expected_snr_db=noise.target_snr_db
        )

    read_sigma = noise.read_sigma_fraction * total / count
    floor = count * read_sigma**2
    if floor >= target_noise:
        ceiling = 10.0 * math.log10(power / floor)
        raise NoiseCalibrationError(
            f"Unachievable SNR {noise.target_snr_db} dB: read noise alone limits "
            f"the SNR to {ceiling:.2f} dB"
        )

    low, high = (math.log10(v) for v in PHOTON_SCALE_BRACKET)

    def snr_at(log_gamma: float) -> float:
        return expected_snr_db(power, total, count, 10.0**log_gamma, read_sigma)

    if snr_at(low) >= noise.target_snr_db:
        logger.warning(
            "Photon scale clamped to %g: target %.2f dB is below the bracket",
            PHOTON_SCALE_BRACKET[0],
            noise.target_snr_db,
        )
        high = low
    elif snr_at(high) <= noise.target_snr_db:
        raise NoiseCalibrationError(
            f"Unachievable SNR {noise.target_snr_db} dB within photon scale "
            f"bracket {PHOTON_SCALE_BRACKET}"
        )
    for _ in range(BISECTION_STEPS):
        middle = 0.5 * (low + high)
        if snr_at(middle) < noise.target_snr_db:
            low = middle
        else:
            high = middle
    photon_scale = 10.0 ** (0.5 * (low + high))
    return NoiseCalibration(
        model="poisson+gaussian",
        photon_scale=photon_scale,
        read_sigma=read_sigma,
        expected_snr_db=expected_snr_db(power, total, count, photon_scale, read_sigma),
    )


def apply_noise(
    frame: np.ndarray,
    noise: NoiseSpec,
    rng: np.random.Generator,
    calibration: Optional[NoiseCalibration] = None,
) -> np.ndarray:
    """Draw a noisy capture of ``frame``.

    Args:
        frame: Clean nonnegative intensities.
        noise: Noise specification.
        rng: Generator owning this frame's noise stream.
        calibration: Stack-level calibration; calibrated on ``frame`` alone
            when omitted.

    Returns:
        Noisy intensities clamped at 0 (a copy of ``frame`` for model none).
    """
    clean = np.asarray(frame, dtype=np.float64)
    if noise.model == "none":
        return clean.copy()
    if calibration is None:
        calibration = calibrate_noise([clean], noise)

    if noise.model == "gaussian":
        noisy = clean + rng.normal(0.0, calibration.read_sigma, size=clean.shape)
    else:
        gamma = calibration.photon_scale
        noisy = rng.poisson(gamma * clean) / gamma
        noisy = noisy + rng.normal(0.0, calibration.read_sigma, size=clean.shape)
    return np.maximum(noisy, 0.0)
