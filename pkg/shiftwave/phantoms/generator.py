# shiftwave/phantoms/generator.py

"""
Phantom generation: resolves a profile by name, evaluates its phase and pairs
it with a uniform or image-derived amplitude.
"""

from pathlib import Path
from typing import Dict, Tuple, Type

import numpy as np

from shiftwave.core import ComplexField, PhantomError, PhaseMap
from shiftwave.io.pgm import center_crop, load_intensity
from shiftwave.phantoms.models import UNIFORM_AMPLITUDE, Phantom, PhantomSpec
from shiftwave.phantoms.profiles import (
    FlatProfile,
    LensProfile,
    PeaksProfile,
    PhaseProfile,
    QuadraticProfile,
    RandomProfile,
)

MIN_SIZE = 8


class PhantomGenerator:
    """Builds ground-truth fields from PhantomSpec values."""

    _profiles: Dict[str, Type[PhaseProfile]] = {
        "quadratic": QuadraticProfile,
        "random": RandomProfile,
        "peaks": PeaksProfile,
        "lens": LensProfile,
        "flat": FlatProfile,
    }

    @classmethod
    def kinds(cls) -> Tuple[str, ...]:
        return tuple(cls._profiles)

    def profile(self, kind: str) -> PhaseProfile:
        if kind not in self._profiles:
            raise PhantomError(f"Unsupported phantom kind: {kind}")
        return self._profiles[kind]()

    def amplitude(self, spec: PhantomSpec) -> np.ndarray:
        """Uniform ones, or a P5 image center-cropped to the spec size."""
        shape = (spec.height, spec.width)
        if spec.amplitude_source == UNIFORM_AMPLITUDE:
            return np.ones(shape, dtype=np.float64)
        image = load_intensity(Path(spec.amplitude_source))
        if image.shape[0] < shape[0] or image.shape[1] < shape[1]:
            raise PhantomError(
                f"Image shape mismatch: {image.shape[0]}x{image.shape[1]} "
                f"is smaller than {shape[0]}x{shape[1]}"
            )
        return center_crop(image, *shape)

    def generate(self, spec: PhantomSpec) -> Phantom:
        """Generate the phantom described by ``spec``.

        Raises:
            PhantomError: Unknown kind, grid smaller than 8x8, bad parameters
                or an image smaller than the grid.
        """
        if spec.height < MIN_SIZE or spec.width < MIN_SIZE:
            raise PhantomError(
                f"Invalid phantom size {spec.height}x{spec.width}: minimum is {MIN_SIZE}"
            )
        profile = self.profile(spec.kind)
        try:
            params = profile.resolve_params(spec.params)
            rng = np.random.default_rng(spec.rng_seed)
            phase = profile.phase((spec.height, spec.width), params, rng)
        except ValueError as e:
            raise PhantomError(str(e)) from e
        amplitude = self.amplitude(spec)
        return Phantom(
            field=ComplexField.from_polar(amplitude, phase),
            truth=PhaseMap(phase),
            params=params,
        )


def generate(spec: PhantomSpec) -> Phantom:
    """Module-level shortcut for ``PhantomGenerator().generate``."""
    return PhantomGenerator().generate(spec)
