# shiftwave/optics/sharpness.py

"""
Focus criteria evaluated on propagated intensities.
"""

from abc import ABC, abstractmethod
from typing import Dict, Tuple, Type

import numpy as np


class SharpnessCriterion(ABC):
    """Scores an intensity image; larger means better focused."""

    name: str = ""

    @abstractmethod
    def score(self, intensity: np.ndarray) -> float:
        pass


class NormalizedVariance(SharpnessCriterion):
    """var(I) / mean(I)^2."""

    name = "normalized_variance"

    def score(self, intensity: np.ndarray) -> float:
        mean = float(np.mean(intensity))
        if mean <= 0:
            return 0.0
        return float(np.var(intensity)) / mean**2


class GradientEnergy(SharpnessCriterion):
    """Sum of squared finite differences, normalized by total energy squared."""

    name = "gradient_energy"

    def score(self, intensity: np.ndarray) -> float:
        total = float(np.sum(intensity))
        if total <= 0:
            return 0.0
        gy, gx = np.gradient(np.asarray(intensity, dtype=np.float64))
        return float(np.sum(gx**2 + gy**2)) * intensity.size / total**2


_criteria: Dict[str, Type[SharpnessCriterion]] = {
    "normalized_variance": NormalizedVariance,
    "gradient_energy": GradientEnergy,
}

SHARPNESS_CRITERIA: Tuple[str, ...] = tuple(_criteria)


def get_criterion(name: str) -> SharpnessCriterion:
    if name not in _criteria:
        raise ValueError(f"Unsupported sharpness criterion: {name}")
    return _criteria[name]()
