# shiftwave/propagate/propagator.py

"""
Engine selection for phase propagation.
"""

from typing import Dict, Optional, Tuple, Type

from shiftwave.core import ShiftSet, centered_reference
from shiftwave.extract.models import PhasorGrid
from shiftwave.propagate.engines import BfsEngine, PropagationEngine, WavefrontEngine
from shiftwave.propagate.models import AveragingMode, PropagationResult


class PhasePropagator:
    """Recovers a phase map from a PhasorGrid with a chosen engine."""

    _engines: Dict[str, Type[PropagationEngine]] = {
        "bfs": BfsEngine,
        "wavefront": WavefrontEngine,
    }

    def __init__(self, engine: str = "wavefront", averaging: AveragingMode = "mean") -> None:
        """Initialize the propagator.

        Args:
            engine: ``bfs`` or ``wavefront``.
            averaging: Equal-hop averaging rule passed to the engine.
        """
        if engine not in self._engines:
            raise ValueError(f"Unsupported propagation engine: {engine}")
        self.engine = self._engines[engine](averaging=averaging)

    @classmethod
    def engines(cls) -> Tuple[str, ...]:
        return tuple(cls._engines)

    def propagate(
        self,
        phasors: PhasorGrid,
        shifts: Optional[ShiftSet] = None,
        reference: Optional[Tuple[int, int]] = None,
    ) -> PropagationResult:
        """Propagate from ``reference`` (default: the centered origin).

        Raises:
            ValueError: ``shifts`` disagrees with the shifts of ``phasors``.
            PropagationError: The reference pixel has no valid edge.
        """
        if shifts is not None and tuple(shifts) != tuple(phasors.shifts):
            raise ValueError(
                f"Shift set {shifts.label()} does not match phasors {phasors.shifts.label()}"
            )
        reference = reference or centered_reference(phasors.shape)
        return self.engine.propagate(phasors, reference)


def propagate_bfs(
    phasors: PhasorGrid,
    shifts: Optional[ShiftSet] = None,
    reference: Optional[Tuple[int, int]] = None,
    averaging: AveragingMode = "mean",
) -> PropagationResult:
    return PhasePropagator("bfs", averaging).propagate(phasors, shifts, reference)


def propagate_wavefront(
    phasors: PhasorGrid,
    shifts: Optional[ShiftSet] = None,
    reference: Optional[Tuple[int, int]] = None,
    averaging: AveragingMode = "mean",
) -> PropagationResult:
    return PhasePropagator("wavefront", averaging).propagate(phasors, shifts, reference)
