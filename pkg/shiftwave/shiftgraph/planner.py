# shiftwave/shiftgraph/planner.py

"""
Shift planning: 2D shift sets built from per-axis 1D theory, named hardware
presets, and the second-shift sweep.

Each planned magnitude is used once horizontally and once vertically. Rows
and columns are then line graphs of their own, and the 2D graph is connected
whenever both axes are (one column vertically, then every row horizontally).
"""

import logging
import math
from typing import Dict, List, Optional, Sequence, Tuple

from shiftwave.core import ShiftSet
from shiftwave.propagate import AveragingMode
from shiftwave.shiftgraph.graph import hop_distances
from shiftwave.shiftgraph.models import LineGraph, PairSweepRow
from shiftwave.shiftgraph.studies import line_mean_error
from shiftwave.shiftgraph.theory import coprime_guarantee, optimal_pair

logger = logging.getLogger(__name__)

PLAN_SIZES: Tuple[int, ...] = (1, 2, 4, 8)

# magnitudes chosen for 512-pixel grids; scaled to other grid sizes
_EXTRA_PAIR_MAGNITUDES: Tuple[int, ...] = (23, 31)
_EIGHT_SHIFT_MAGNITUDES: Tuple[int, ...] = (16, 17, 21, 33, 11, 22, 13, 63)
_PRESET_GRID = 512

HARDWARE_PRESETS: Dict[str, Tuple[int, ...]] = {
    "hardware-16": (24, 25),
    "hardware-24": (21, 24, 25),
}


def _scaled(magnitudes: Sequence[int], size: int, taken: Sequence[int] = ()) -> List[int]:
    """Scale preset magnitudes to ``size``; collisions move to the next unused integer."""
    used = list(taken)
    scaled = []
    for m in magnitudes:
        value = max(1, int(math.floor(m * size / _PRESET_GRID + 0.5)))
        while value in used:
            value += 1
        used.append(value)
        scaled.append(value)
    return scaled


def plan_magnitudes(height: int, width: int, n_shifts: int) -> List[int]:
    """Axis magnitudes for a plan with ``n_shifts`` magnitudes."""
    if n_shifts not in PLAN_SIZES:
        raise ValueError(f"Unsupported shift count: {n_shifts} (expected one of {PLAN_SIZES})")
    size = min(height, width)
    if n_shifts == 1:
        return [1]
    pair = list(optimal_pair(size))
    if n_shifts == 2:
        return pair
    if n_shifts == 4:
        return pair + _scaled(_EXTRA_PAIR_MAGNITUDES, size, pair)
    return _scaled(_EIGHT_SHIFT_MAGNITUDES, size)


def plan_2d(height: int, width: int, n_shifts: int) -> ShiftSet:
    """Horizontal and vertical shifts for an H x W grid.

    Args:
        height: Grid rows.
        width: Grid columns.
        n_shifts: 1, 2, 4 or 8 magnitudes.

    Returns:
        ShiftSet with one (0, m) and one (m, 0) vector per magnitude.

    Raises:
        ValueError: Unsupported shift count, or a grid too small for the
            optimal pair.
        InvalidShiftError: A magnitude does not fit the grid.
    """
    shifts = ShiftSet.from_magnitudes(plan_magnitudes(height, width, n_shifts))
    shifts.validate_for((height, width))
    return shifts


def plan_named(name: str, height: int, width: int) -> ShiftSet:
    """Shift set of a named hardware preset."""
    if name not in HARDWARE_PRESETS:
        raise ValueError(f"Unsupported shift preset: {name}")
    shifts = ShiftSet.from_magnitudes(HARDWARE_PRESETS[name])
    shifts.validate_for((height, width))
    return shifts


def measurement_count(shifts: ShiftSet) -> int:
    """Shifted captures: one per vector and quadrature."""
    return 4 * len(shifts)


def pair_sweep(
    n: int,
    s_fixed: int,
    t_values: Optional[Sequence[int]] = None,
    trials: int = 0,
    sigma: float = 0.1,
    seed: int = 0,
    averaging: AveragingMode = "mean",
) -> List[PairSweepRow]:
    """Max hop, connectivity and optionally simulated error for every t.

    Args:
        n: Node count.
        s_fixed: First shift, 1 <= s_fixed < n.
        t_values: Candidate second shifts (default 1..n-1).
        trials: Monte-Carlo trials per t; 0 skips the simulation.
        sigma: Difference noise (radians) for the simulation.
        seed: Base seed; every t reuses the same trial seeds.
        averaging: Equal-hop averaging rule for the simulation.
    """
    if not 1 <= s_fixed < n:
        raise ValueError(f"Invalid fixed shift {s_fixed} for {n} nodes")
    candidates = list(t_values) if t_values is not None else list(range(1, n))
    rows = []
    for t in candidates:
        hops = hop_distances(LineGraph(n, (s_fixed, t)))
        error = None
        if trials > 0 and hops.is_complete:
            error = line_mean_error(n, (s_fixed, t), sigma, trials, seed=seed, averaging=averaging)
        rows.append(
            PairSweepRow(
                s=s_fixed,
                t=int(t),
                max_hop=hops.max_hop,
                connected=hops.is_complete,
                coprime_guarantee=coprime_guarantee(s_fixed, int(t), n),
                mean_error=error,
            )
        )
    return rows
