# shiftwave/propagate/engines/wavefront.py

"""
Parallel wavefront expansion.

Each iteration pushes every frontier pixel along every shift in both
directions with whole-array slice operations. Pixels first reached in an
iteration take that iteration as their hop; their arrivals are reduced by
summation before the frontier advances, so iterations act as barriers.
"""

from typing import Tuple

import numpy as np

from shiftwave.core import UNREACHABLE, pair_slices
from shiftwave.extract.models import PhasorGrid
from shiftwave.propagate.engines.base import PropagationEngine
from shiftwave.propagate.models import TIE_MAGNITUDE, PropagationResult


class _Arrivals:
    """Per-iteration reduction buffers."""

    def __init__(self, shape: Tuple[int, int]) -> None:
        self.total = np.zeros(shape, dtype=np.complex128)
        self.count = np.zeros(shape, dtype=np.int64)
        self.first = np.zeros(shape, dtype=np.complex128)
        self.seen = np.zeros(shape, dtype=bool)

    def deposit(self, region, selected: np.ndarray, phasors: np.ndarray) -> None:
        total, count = self.total[region], self.count[region]
        first, seen = self.first[region], self.seen[region]
        total[selected] += phasors[selected]
        count[selected] += 1
        fresh = selected & ~seen
        first[fresh] = phasors[fresh]
        seen[fresh] = True


class WavefrontEngine(PropagationEngine):
    """Vectorized breadth-first propagation; same hops and phases as BfsEngine."""

    name = "wavefront"
    supported_averaging = ("mean", "none")

    def propagate(
        self, phasors: PhasorGrid, reference: Tuple[int, int]
    ) -> PropagationResult:
        self.check_reference(phasors, reference)
        shape = phasors.shape

        links = []
        for k in range(len(phasors)):
            delta, grid, mask = phasors.edges(k)
            if not delta.fits(shape):
                continue
            base, ahead = pair_slices(shape, delta)
            links.append((base, ahead, mask[base], grid[base]))

        values = np.zeros(shape, dtype=np.complex128)
        hops = np.full(shape, UNREACHABLE, dtype=np.int64)
        values[reference] = 1.0
        hops[reference] = 0
        frontier = np.zeros(shape, dtype=bool)
        frontier[reference] = True

        iteration = 0
        while True:
            arrivals = _Arrivals(shape)
            open_ = hops == UNREACHABLE
            for base, ahead, mask, grid in links:
                forward = frontier[base] & mask & open_[ahead]
                arrivals.deposit(ahead, forward, values[base] * np.conj(grid))
                backward = frontier[ahead] & mask & open_[base]
                arrivals.deposit(base, backward, values[ahead] * grid)
            reached = arrivals.count > 0
            if not reached.any():
                break
            iteration += 1
            values[reached] = self._settle(arrivals, reached)
            hops[reached] = iteration
            frontier = reached

        return self.finish(values, hops, reference, iteration)

    def _settle(self, arrivals: _Arrivals, reached: np.ndarray) -> np.ndarray:
        first = arrivals.first[reached]
        if self.averaging == "none":
            return first
        mean = arrivals.total[reached] / arrivals.count[reached]
        return np.where(np.abs(mean) < TIE_MAGNITUDE, first, mean)
