# shiftwave/metrics/phase_error.py

"""
Mean absolute phase error after removing the circular-mean global offset.
"""

from typing import List, Optional, Sequence, Union

import numpy as np
from scipy.stats import spearmanr

from shiftwave.core import HopMap, MetricError, PhaseMap
from shiftwave.metrics.models import ErrorReport, HopErrorRow

Estimate = Union[PhaseMap, np.ndarray]


def _unit_phasors(estimate: Estimate) -> np.ndarray:
    if isinstance(estimate, PhaseMap):
        return estimate.phasors()
    values = np.asarray(estimate)
    if np.iscomplexobj(values):
        return np.exp(1j * np.angle(values))
    return np.exp(1j * values.astype(np.float64))


def _region(shape, mask: Optional[np.ndarray]) -> np.ndarray:
    region = np.ones(shape, dtype=bool) if mask is None else np.asarray(mask, dtype=bool)
    if region.shape != tuple(shape):
        raise MetricError(f"Mask shape {region.shape} does not match {tuple(shape)}")
    if not region.any():
        raise MetricError("Empty mask: no pixels to evaluate")
    return region


def corrected_errors(
    estimate: Estimate, truth: PhaseMap, mask: Optional[np.ndarray] = None
) -> tuple:
    """Absolute wrapped errors after global correction, and the offset theta.

    Returns:
        ``(errors, theta)`` where ``errors`` covers the whole grid and theta
        = angle(sum over mask of p_hat * conj(p_gt)).
    """
    estimated = _unit_phasors(estimate)
    if estimated.shape != truth.shape:
        raise MetricError(f"Shape mismatch: estimate {estimated.shape} vs truth {truth.shape}")
    region = _region(truth.shape, mask)
    product = estimated * np.conj(truth.phasors())
    theta = float(np.angle(np.sum(product[region])))
    errors = np.abs(np.angle(product * np.exp(-1j * theta)))
    return errors, theta


def phase_error(
    estimate: Estimate,
    truth: PhaseMap,
    mask: Optional[np.ndarray] = None,
    hops: Optional[HopMap] = None,
) -> ErrorReport:
    """Mean absolute phase error of ``estimate`` against ``truth``.

    Args:
        estimate: Estimated phase, or complex phasors (only their angle counts).
        truth: Ground-truth phase.
        mask: Pixels to evaluate; all pixels by default.
        hops: When given, the report carries an error-by-hop table.

    Raises:
        MetricError: Empty mask or mismatched shapes.
    """
    errors, theta = corrected_errors(estimate, truth, mask)
    region = _region(truth.shape, mask)
    selected = errors[region]
    report = ErrorReport(
        mean_abs_error=float(selected.mean()), std=float(selected.std()), theta=theta
    )
    if hops is not None:
        report.per_hop = _bin_by_hop(errors, hops, region)
    return report


def _bin_by_hop(errors: np.ndarray, hops: HopMap, region: np.ndarray) -> List[HopErrorRow]:
    if hops.hops.shape != errors.shape:
        raise MetricError(f"Hop map shape {hops.hops.shape} does not match {errors.shape}")
    usable = region & hops.reachable
    levels = hops.hops[usable]
    values = errors[usable]
    rows = []
    for hop in np.unique(levels):
        selected = values[levels == hop]
        rows.append(HopErrorRow(hop=int(hop), mean_error=float(selected.mean()), count=int(selected.size)))
    return rows


def error_vs_hop(
    estimate: Estimate,
    truth: PhaseMap,
    hops: HopMap,
    mask: Optional[np.ndarray] = None,
) -> List[HopErrorRow]:
    """Post-correction absolute errors grouped by hop; unreachable pixels are skipped."""
    region = _region(truth.shape, mask) & hops.reachable
    errors, _ = corrected_errors(estimate, truth, region)
    return _bin_by_hop(errors, hops, region)


def amplitude_mask(amplitude: np.ndarray, threshold: float) -> np.ndarray:
    """Pixels brighter than ``threshold`` times the peak amplitude."""
    amplitude = np.asarray(amplitude, dtype=np.float64)
    peak = float(amplitude.max()) if amplitude.size else 0.0
    return amplitude > threshold * peak


def hop_monotonicity(rows: Sequence[HopErrorRow]) -> float:
    """Spearman rank correlation between hop and mean error."""
    if len(rows) < 2:
        return float("nan")
    rho, _ = spearmanr([r.hop for r in rows], [r.mean_error for r in rows])
    return float(rho)
