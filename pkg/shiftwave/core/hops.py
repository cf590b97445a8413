# shiftwave/core/hops.py

"""
Hop-distance maps shared by the shift-graph theory and the propagation engines.
"""

import math
from dataclasses import dataclass
from typing import Dict, Tuple, Union

import numpy as np

UNREACHABLE = -1


@dataclass(frozen=True, eq=False)
class HopMap:
    """Shortest hop distance of every node from a reference node.

    Attributes:
        hops: Integer array (1D for line graphs, 2D for pixel grids);
            UNREACHABLE marks nodes with no path to the reference.
        reference: Storage index of the reference node.
    """

    hops: np.ndarray
    reference: Tuple[int, ...]

    def __post_init__(self) -> None:
        hops = np.array(self.hops, dtype=np.int64, copy=True)
        reference = tuple(int(r) for r in self.reference)
        if len(reference) != hops.ndim:
            raise ValueError(
                f"Invalid reference {reference} for a {hops.ndim}D hop map"
            )
        if hops[reference] != 0:
            raise ValueError("Invalid hop map: reference hop must be 0")
        hops.setflags(write=False)
        object.__setattr__(self, "hops", hops)
        object.__setattr__(self, "reference", reference)

    @property
    def reachable(self) -> np.ndarray:
        return self.hops != UNREACHABLE

    @property
    def is_complete(self) -> bool:
        return bool(np.all(self.reachable))

    @property
    def max_hop(self) -> int:
        """Largest finite hop (the diameter seen from the reference)."""
        return int(self.hops[self.reachable].max())

    @property
    def covering_hops(self) -> Union[int, float]:
        """Hops needed to reach every node; infinite when some node is unreachable."""
        return self.max_hop if self.is_complete else math.inf

    def histogram(self) -> Dict[int, int]:
        values, counts = np.unique(self.hops[self.reachable], return_counts=True)
        return {int(v): int(c) for v, c in zip(values, counts)}
