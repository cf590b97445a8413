# shiftwave/propagate/engines/base.py

"""
Base class for phase propagation engines.

Edge convention: for shift k, angle(p_k(i)) ~ phi(i) - phi(i + delta_k), so
moving forward i -> i + delta multiplies by conj(p_k(i)) and moving back
i + delta -> i multiplies by p_k(i).
"""

import logging
from abc import ABC, abstractmethod
from typing import Tuple

import numpy as np

from shiftwave.core import (
    UNREACHABLE,
    HopMap,
    PhaseMap,
    PropagationError,
    wrap_phase,
)
from shiftwave.extract.models import PhasorGrid
from shiftwave.propagate.models import AVERAGING_MODES, AveragingMode, PropagationResult

logger = logging.getLogger(__name__)


class PropagationEngine(ABC):
    """Abstract engine turning a PhasorGrid into a PropagationResult."""

    name: str = ""
    supported_averaging: Tuple[str, ...] = AVERAGING_MODES

    def __init__(self, averaging: AveragingMode = "mean") -> None:
        """Initialize the engine.

        Args:
            averaging: Equal-hop rule: ``mean``, ``pairwise`` or ``none``.
        """
        if averaging not in self.supported_averaging:
            raise ValueError(f"Unsupported averaging for {self.name} engine: {averaging}")
        self.averaging = averaging

    def check_reference(self, phasors: PhasorGrid, reference: Tuple[int, int]) -> None:
        """Raise unless ``reference`` is inside the grid and touches a valid edge."""
        height, width = phasors.shape
        row, col = reference
        if not (0 <= row < height and 0 <= col < width):
            raise PropagationError(f"Reference pixel {reference} is outside the grid")
        for k in range(len(phasors)):
            delta, _, mask = phasors.edges(k)
            if mask[row, col]:
                return
            back_row, back_col = row - delta.dy, col - delta.dx
            if 0 <= back_row < height and 0 <= back_col < width and mask[back_row, back_col]:
                return
        raise PropagationError(
            f"Reference pixel {reference} is masked invalid in every shift"
        )

    def finish(
        self,
        values: np.ndarray,
        hops: np.ndarray,
        reference: Tuple[int, int],
        iterations: int,
    ) -> PropagationResult:
        """Package engine output; phases are read out only here."""
        unreached = hops == UNREACHABLE
        phase = np.where(unreached, 0.0, wrap_phase(np.angle(values)))
        phase[reference] = 0.0
        if unreached.any():
            logger.warning(
                "%s propagation left %d of %d pixels unreached",
                self.name,
                int(unreached.sum()),
                unreached.size,
            )
        return PropagationResult(
            phase=PhaseMap(phase, wrapped=True),
            phasors=np.where(unreached, 0, values),
            hops=HopMap(hops, reference),
            unreached=unreached,
            iterations=iterations,
            engine=self.name,
        )

    @abstractmethod
    def propagate(
        self, phasors: PhasorGrid, reference: Tuple[int, int]
    ) -> PropagationResult:
        """Propagate phasors outward from ``reference``."""
        pass
