# shiftwave/propagate/engines/bfs.py

"""
Queue-based propagation: first visit sets phasor and hop, equal-hop revisits
are averaged, longer-hop arrivals are discarded.
"""

from collections import deque
from typing import List, Optional, Tuple

import numpy as np

from shiftwave.extract.models import PhasorGrid
from shiftwave.propagate.averaging import average_pair, resolve_mean
from shiftwave.propagate.engines.base import PropagationEngine
from shiftwave.propagate.models import PropagationResult


class BfsEngine(PropagationEngine):
    """Single-threaded breadth-first propagation over flat pixel indices."""

    name = "bfs"

    def propagate(
        self, phasors: PhasorGrid, reference: Tuple[int, int]
    ) -> PropagationResult:
        self.check_reference(phasors, reference)
        height, width = phasors.shape
        size = height * width

        # plain lists keep the per-pixel loop cheap
        links = []
        for k in range(len(phasors)):
            delta, grid, mask = phasors.edges(k)
            links.append(
                (delta.dy * width + delta.dx, mask.ravel().tolist(), grid.ravel().tolist())
            )

        hops: List[int] = [-1] * size
        total: List[complex] = [0j] * size
        count: List[int] = [0] * size
        first: List[Optional[complex]] = [None] * size
        value: List[complex] = [0j] * size

        source = reference[0] * width + reference[1]
        hops[source] = 0
        value[source] = 1 + 0j
        queue = deque([source])
        deepest = 0

        while queue:
            node = queue.popleft()
            if node != source:
                value[node] = self._settle(total[node], count[node], first[node])
            level = hops[node] + 1
            here = value[node]
            for step, mask, grid in links:
                ahead = node + step
                if mask[node]:
                    self._arrive(ahead, here * grid[node].conjugate(), level,
                                 hops, total, count, first, queue)
                behind = node - step
                if 0 <= behind < size and mask[behind]:
                    self._arrive(behind, here * grid[behind], level,
                                 hops, total, count, first, queue)
            deepest = max(deepest, level - 1)

        values = np.array(value, dtype=np.complex128).reshape(height, width)
        hop_grid = np.array(hops, dtype=np.int64).reshape(height, width)
        return self.finish(values, hop_grid, reference, deepest)

    def _arrive(self, target, phasor, level, hops, total, count, first, queue) -> None:
        if hops[target] == -1:
            hops[target] = level
            total[target] = phasor
            count[target] = 1
            first[target] = phasor
            queue.append(target)
        elif hops[target] == level:
            if self.averaging == "mean":
                total[target] += phasor
                count[target] += 1
            elif self.averaging == "pairwise":
                total[target] = average_pair(total[target], phasor)
        # longer-hop arrivals are discarded

    def _settle(self, total: complex, count: int, first: complex) -> complex:
        if self.averaging == "mean":
            return resolve_mean(total, count, first)
        if self.averaging == "pairwise":
            return total
        return first
