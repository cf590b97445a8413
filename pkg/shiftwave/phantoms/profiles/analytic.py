# shiftwave/phantoms/profiles/analytic.py

"""
Deterministic phase profiles: quadratic bowl, peaks surface, thin lens, flat.
"""

from typing import Dict, Tuple

import numpy as np

from shiftwave.phantoms.profiles.base import PhaseProfile


def peaks_surface(u: np.ndarray, v: np.ndarray) -> np.ndarray:
    """The two-variable peaks surface z(u, v)."""
    u = np.asarray(u, dtype=np.float64)
    v = np.asarray(v, dtype=np.float64)
    return (
        3.0 * (1.0 - u) ** 2 * np.exp(-(u**2) - (v + 1.0) ** 2)
        - 10.0 * (u / 5.0 - u**3 - v**5) * np.exp(-(u**2) - v**2)
        - np.exp(-((u + 1.0) ** 2) - v**2) / 3.0
    )


class QuadraticProfile(PhaseProfile):
    """alpha * r^2 / max(H, W)^2; alpha = 12 pi spans about 6 pi on a square grid."""

    name = "quadratic"
    defaults = {"alpha": 12.0 * np.pi}

    def phase(
        self, shape: Tuple[int, int], params: Dict[str, float], rng: np.random.Generator
    ) -> np.ndarray:
        scale = float(max(shape)) ** 2
        return params["alpha"] * self.centered_radius_squared(shape) / scale


class PeaksProfile(PhaseProfile):
    """Peaks surface sampled on [-3, 3]^2 (u along columns, v along rows)."""

    name = "peaks"
    defaults = {"scale": 1.0}

    def phase(
        self, shape: Tuple[int, int], params: Dict[str, float], rng: np.random.Generator
    ) -> np.ndarray:
        v = np.linspace(-3.0, 3.0, shape[0])
        u = np.linspace(-3.0, 3.0, shape[1])
        return params["scale"] * peaks_surface(u[None, :], v[:, None])


class LensProfile(PhaseProfile):
    """Thin lens -(pi / (lambda f)) * r^2 * pitch^2."""

    name = "lens"
    defaults = {"wavelength": 532e-9, "focal_length": 0.075, "pitch": 3.45e-6}

    def phase(
        self, shape: Tuple[int, int], params: Dict[str, float], rng: np.random.Generator
    ) -> np.ndarray:
        if params["wavelength"] <= 0 or params["focal_length"] == 0:
            raise ValueError(
                f"Invalid lens parameters: wavelength={params['wavelength']}, "
                f"focal_length={params['focal_length']}"
            )
        k = np.pi / (params["wavelength"] * params["focal_length"])
        return -k * self.centered_radius_squared(shape) * params["pitch"] ** 2


class FlatProfile(PhaseProfile):
    name = "flat"
    defaults: Dict[str, float] = {}

    def phase(
        self, shape: Tuple[int, int], params: Dict[str, float], rng: np.random.Generator
    ) -> np.ndarray:
        return np.zeros(shape, dtype=np.float64)
