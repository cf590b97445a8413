# shiftwave/shiftgraph/graph.py

"""
Shift graphs as sparse adjacency matrices, with exact BFS hop distances and
connectivity.

Line graphs follow the centered 1D index set; pixel graphs are the realized
2D graphs whose edges are the valid pixels of a PhasorGrid.
"""

from typing import Iterable, Optional, Sequence, Tuple

import numpy as np
from scipy.sparse import csr_matrix
from scipy.sparse.csgraph import connected_components, shortest_path

from shiftwave.core import UNREACHABLE, HopMap, centered_reference
from shiftwave.extract.models import PhasorGrid
from shiftwave.shiftgraph.models import LineGraph

# pairs per sparse batch in connected_batch
_BATCH_PAIRS = 4096


def _csr(rows: Sequence[np.ndarray], cols: Sequence[np.ndarray], size: int) -> csr_matrix:
    if rows:
        r = np.concatenate(rows)
        c = np.concatenate(cols)
    else:
        r = np.zeros(0, dtype=np.int64)
        c = np.zeros(0, dtype=np.int64)
    data = np.ones(r.size, dtype=np.int8)
    return csr_matrix((data, (r, c)), shape=(size, size))


def line_adjacency(g: LineGraph) -> csr_matrix:
    """Upper-triangular adjacency of the non-wrapping line graph (storage indices)."""
    rows, cols = [], []
    for s in sorted(set(g.shifts)):
        if s < g.n:
            start = np.arange(g.n - s, dtype=np.int64)
            rows.append(start)
            cols.append(start + s)
    return _csr(rows, cols, g.n)


def _bfs_hops(adjacency: csr_matrix, source: int) -> np.ndarray:
    distances = shortest_path(adjacency, directed=False, unweighted=True, indices=source)
    hops = np.full(distances.shape, UNREACHABLE, dtype=np.int64)
    finite = np.isfinite(distances)
    hops[finite] = distances[finite].astype(np.int64)
    return hops


def hop_distances(g: LineGraph, reference: int = 0) -> HopMap:
    """Exact BFS hop distance of every node from ``reference``.

    Args:
        g: Line graph.
        reference: Centered node index (0 is the centered origin).

    Returns:
        HopMap over storage indices; unreachable nodes are marked, not an error.
    """
    source = g.to_index(reference)
    return HopMap(_bfs_hops(line_adjacency(g), source), (source,))


def is_connected(g: LineGraph, reference: int = 0) -> bool:
    """True iff every node has a finite hop distance from ``reference``."""
    return hop_distances(g, reference).is_complete


def _block_edges(n: int, shifts: np.ndarray) -> Tuple[np.ndarray, np.ndarray]:
    """Edges (j, j + s) of block b = 0..len(shifts)-1, offset by b * n, one shift per block."""
    counts = np.clip(n - shifts, 0, None)
    total = int(counts.sum())
    starts = np.repeat(np.arange(shifts.size, dtype=np.int64) * n, counts)
    local = np.arange(total, dtype=np.int64) - np.repeat(np.cumsum(counts) - counts, counts)
    rows = starts + local
    return rows, rows + np.repeat(shifts, counts)


def connected_batch(n: int, pairs: Sequence[Tuple[int, int]]) -> np.ndarray:
    """Connectivity of the line graph on n nodes for many shift pairs at once.

    Every pair becomes one block of a block-diagonal graph so a single
    connected-components pass decides them all.

    Returns:
        Boolean array aligned with ``pairs``.
    """
    table = np.asarray(pairs, dtype=np.int64).reshape(-1, 2)
    if np.any(table < 1):
        raise ValueError("Invalid shift pair: magnitudes must be positive")
    result = np.zeros(len(table), dtype=bool)
    for begin in range(0, len(table), _BATCH_PAIRS):
        chunk = table[begin : begin + _BATCH_PAIRS]
        rows, cols = [], []
        for column in range(2):
            r, c = _block_edges(n, chunk[:, column])
            rows.append(r)
            cols.append(c)
        graph = _csr(rows, cols, len(chunk) * n)
        _, labels = connected_components(graph, directed=False)
        labels = labels.reshape(len(chunk), n)
        result[begin : begin + len(chunk)] = np.all(labels == labels[:, :1], axis=1)
    return result


def pixel_graph(phasors: PhasorGrid, shifts: Optional[Iterable[int]] = None) -> csr_matrix:
    """Realized pixel graph: one edge (i, i + delta_k) per valid phasor pixel.

    Args:
        phasors: Phasor grid whose masks define the edges.
        shifts: Optional subset of shift indices to include.
    """
    height, width = phasors.shape
    rows, cols = [], []
    indices = range(len(phasors)) if shifts is None else shifts
    for k in indices:
        delta, _, mask = phasors.edges(k)
        r, c = np.nonzero(mask)
        rows.append(r * width + c)
        cols.append((r + delta.dy) * width + (c + delta.dx))
    return _csr(rows, cols, height * width)


def pixel_hop_distances(
    phasors: PhasorGrid, reference: Optional[Tuple[int, int]] = None
) -> HopMap:
    """BFS hop distance of every pixel over the realized pixel graph."""
    height, width = phasors.shape
    reference = reference or centered_reference((height, width))
    source = reference[0] * width + reference[1]
    hops = _bfs_hops(pixel_graph(phasors), source).reshape(height, width)
    return HopMap(hops, reference)
