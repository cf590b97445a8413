# shiftwave/refine/models.py

"""
Data structures for least-squares phase refinement.
"""

from dataclasses import dataclass, field
from typing import List, Tuple

import numpy as np

from shiftwave.core import PhaseMap, ShiftSet


@dataclass
class UnwrappedDifferences:
    """Measured phase differences lifted off the 2 pi ambiguity.

    At valid pixels ``unwrapped[k] == angle(p_k) + 2 pi offsets[k]``.

    Attributes:
        shifts: Shift vectors, one per grid.
        unwrapped: Unwrapped differences in radians.
        masks: Valid measurement pixels.
        offsets: Integer offsets m_k (0 at invalid pixels).
        predicted: Differences of the estimate, D_k[estimate]; they stand in
            for invalid pixels in the circular least-squares solve.
    """

    shifts: ShiftSet
    unwrapped: List[np.ndarray]
    masks: List[np.ndarray]
    offsets: List[np.ndarray]
    predicted: List[np.ndarray]

    @property
    def shape(self) -> Tuple[int, int]:
        first = self.masks[0]
        return (int(first.shape[0]), int(first.shape[1]))

    def filled(self, k: int) -> np.ndarray:
        """Unwrapped differences with invalid pixels taken from the estimate."""
        return np.where(self.masks[k], self.unwrapped[k], self.predicted[k])


@dataclass(frozen=True)
class RefinedPhase:
    """Output of the refinement pipeline.

    Attributes:
        unwrapped: Least-squares phase, zero at the reference pixel.
        wrapped: The same phase wrapped into [-pi, pi).
        lam: Regularization weight used.
        dropped_shifts: Indices of shifts with no valid difference pixel.
    """

    unwrapped: PhaseMap
    wrapped: PhaseMap
    lam: float
    dropped_shifts: Tuple[int, ...] = field(default_factory=tuple)
