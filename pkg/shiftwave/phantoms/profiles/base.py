# shiftwave/phantoms/profiles/base.py

"""
Base class for phantom phase profiles.
"""

from abc import ABC, abstractmethod
from typing import Dict, Tuple

import numpy as np


class PhaseProfile(ABC):
    """Abstract phase profile evaluated on a pixel grid."""

    name: str = ""
    defaults: Dict[str, float] = {}

    def resolve_params(self, params: Dict[str, float]) -> Dict[str, float]:
        """Merge user parameters over the profile defaults.

        Raises:
            ValueError: If a parameter is not known to the profile.
        """
        unknown = set(params) - set(self.defaults)
        if unknown:
            raise ValueError(
                f"Unsupported {self.name} parameters: {', '.join(sorted(unknown))}"
            )
        merged = dict(self.defaults)
        merged.update({key: float(value) for key, value in params.items()})
        return merged

    @staticmethod
    def centered_radius_squared(shape: Tuple[int, int]) -> np.ndarray:
        """(i - c_y)^2 + (j - c_x)^2 with c at the geometric grid center."""
        height, width = shape
        rows = np.arange(height, dtype=np.float64) - (height - 1) / 2.0
        cols = np.arange(width, dtype=np.float64) - (width - 1) / 2.0
        return rows[:, None] ** 2 + cols[None, :] ** 2

    @abstractmethod
    def phase(
        self, shape: Tuple[int, int], params: Dict[str, float], rng: np.random.Generator
    ) -> np.ndarray:
        """Evaluate the phase in radians on a grid of the given shape."""
        pass
