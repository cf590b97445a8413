# shiftwave/propagate/models.py

"""
Result of propagating phase differences over the pixel shift graph.
"""

from dataclasses import dataclass
from pathlib import Path
from typing import Tuple, Union

import numpy as np
from typing_extensions import Literal

from shiftwave.core import HopMap, PhaseMap
from shiftwave.io import write_field

AveragingMode = Literal["mean", "pairwise", "none"]
AVERAGING_MODES: Tuple[str, ...] = ("mean", "pairwise", "none")

# below this magnitude an equal-hop average keeps the first arrival
TIE_MAGNITUDE = 1e-12

PathLike = Union[str, Path]


@dataclass(frozen=True)
class PropagationResult:
    """Recovered phase and the bookkeeping that produced it.

    Attributes:
        phase: Wrapped phase, 0 at the reference and at unreached pixels.
        phasors: Propagated complex estimates, |p| in (0, 1] where reached.
        hops: Hop distance of every pixel from the reference.
        unreached: Pixels with no path from the reference.
        iterations: Expansion rounds performed (equals the max hop).
        engine: Name of the engine used.
    """

    phase: PhaseMap
    phasors: np.ndarray
    hops: HopMap
    unreached: np.ndarray
    iterations: int
    engine: str

    @property
    def reference(self) -> Tuple[int, int]:
        return (self.hops.reference[0], self.hops.reference[1])

    def save(self, directory: PathLike) -> Path:
        """Write phase.srwf, hops.srwf and unreached.srwf (all kind 1)."""
        root = Path(directory)
        root.mkdir(parents=True, exist_ok=True)
        write_field(root / "phase.srwf", self.phase)
        write_field(root / "hops.srwf", self.hops.hops.astype(np.float32))
        write_field(root / "unreached.srwf", self.unreached.astype(np.float32))
        return root
