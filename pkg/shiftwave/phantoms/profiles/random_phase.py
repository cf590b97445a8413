# shiftwave/phantoms/profiles/random_phase.py

"""
I.i.d. uniform random phase profile.
"""

from typing import Dict, Tuple

import numpy as np

from shiftwave.phantoms.profiles.base import PhaseProfile


class RandomProfile(PhaseProfile):
    """Independent uniform phases in [-pi, pi)."""

    name = "random"
    defaults: Dict[str, float] = {}

    def phase(
        self, shape: Tuple[int, int], params: Dict[str, float], rng: np.random.Generator
    ) -> np.ndarray:
        # uniform() draws from [low, high)
        return rng.uniform(-np.pi, np.pi, size=shape)
