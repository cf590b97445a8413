# shiftwave/shiftgraph/studies.py

"""
Monte-Carlo error-accumulation studies on 1D line graphs.

Each trial draws a uniform random phase on a 1 x N grid, perturbs the exact
difference phasors with i.i.d. angle noise and propagates from the centered
node. Errors are measured against the truth re-referenced to that node, so
the reference itself is exact and error grows with hop distance.
"""

from typing import List, Sequence, Tuple

import numpy as np

from shiftwave.core import HopMap, PhaseMap, ShiftSet, ShiftVector
from shiftwave.extract import synthetic_phasors
from shiftwave.extract.synthetic import AngleNoise
from shiftwave.metrics import HopErrorRow
from shiftwave.propagate import AveragingMode, PhasePropagator


def line_shifts(magnitudes: Sequence[int]) -> ShiftSet:
    """Horizontal shifts for a 1 x N grid, duplicates removed."""
    return ShiftSet(tuple(ShiftVector(0, int(m)) for m in sorted(set(magnitudes))))


def referenced_errors(estimate: PhaseMap, truth: PhaseMap, hops: HopMap) -> np.ndarray:
    """|wrapped error| against the truth shifted to 0 at the reference."""
    relative = truth.data - truth.data[hops.reference]
    return np.abs(np.angle(np.exp(1j * (estimate.data - relative))))


def line_trial(
    n: int,
    shifts: ShiftSet,
    sigma: float,
    rng: np.random.Generator,
    engine: str = "wavefront",
    averaging: AveragingMode = "mean",
    distribution: AngleNoise = "gaussian",
) -> Tuple[np.ndarray, HopMap]:
    """One noisy propagation; returns per-node errors and hops (row 0 only)."""
    truth = PhaseMap(rng.uniform(-np.pi, np.pi, size=(1, n)))
    phasors = synthetic_phasors(truth, shifts, sigma, rng, distribution)
    result = PhasePropagator(engine, averaging).propagate(phasors)
    return referenced_errors(result.phase, truth, result.hops), result.hops


def hop_error_curve(
    n: int,
    magnitudes: Sequence[int],
    sigma: float,
    trials: int,
    seed: int = 0,
    averaging: AveragingMode = "mean",
    engine: str = "wavefront",
    distribution: AngleNoise = "gaussian",
) -> List[HopErrorRow]:
    """Mean absolute error per hop distance, pooled over trials.

    Trial i uses ``default_rng([seed, i])`` so curves for different shift
    sets or averaging rules share their random draws.
    """
    if trials < 1:
        raise ValueError(f"Invalid trial count: {trials}")
    shifts = line_shifts(magnitudes)
    sums = np.zeros(0)
    counts = np.zeros(0, dtype=np.int64)
    for trial in range(trials):
        rng = np.random.default_rng([int(seed), trial])
        errors, hops = line_trial(n, shifts, sigma, rng, engine, averaging, distribution)
        reached = hops.reachable
        levels = hops.hops[reached]
        size = int(levels.max()) + 1
        if size > sums.size:
            sums = np.pad(sums, (0, size - sums.size))
            counts = np.pad(counts, (0, size - counts.size))
        sums[:size] += np.bincount(levels, weights=errors[reached], minlength=size)
        counts[:size] += np.bincount(levels, minlength=size)
    return [
        HopErrorRow(hop=h, mean_error=float(sums[h] / counts[h]), count=int(counts[h]))
        for h in range(sums.size)
        if counts[h] > 0
    ]


def line_mean_error(
    n: int,
    magnitudes: Sequence[int],
    sigma: float,
    trials: int,
    seed: int = 0,
    averaging: AveragingMode = "mean",
    engine: str = "wavefront",
) -> float:
    """Mean absolute error over every reached node and trial."""
    rows = hop_error_curve(n, magnitudes, sigma, trials, seed, averaging, engine)
    total = sum(r.mean_error * r.count for r in rows)
    return total / sum(r.count for r in rows)


def final_hop_error(rows: Sequence[HopErrorRow]) -> float:
    """Error at the largest hop distance of a curve."""
    return max(rows, key=lambda r: r.hop).mean_error
