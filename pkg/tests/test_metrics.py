"""
Tests for phase error, per-hop tables and empirical SNR.
"""

import math

import numpy as np
import pytest

from shiftwave.core import HopMap, MetricError, PhaseMap
from shiftwave.metrics import (
    HopErrorRow,
    amplitude_mask,
    empirical_snr,
    error_vs_hop,
    hop_monotonicity,
    phase_error,
)


def test_global_offset_is_removed(smooth_phase):
    shifted = PhaseMap(smooth_phase.data + 1.234)
    report = phase_error(shifted, smooth_phase)
    assert report.mean_abs_error < 1e-12
    assert report.theta == pytest.approx(1.234)


def test_error_is_wrapped_and_bounded(rng):
    truth = PhaseMap(rng.uniform(-np.pi, np.pi, size=(32, 32)))
    estimate = PhaseMap(rng.uniform(-np.pi, np.pi, size=(32, 32)))
    report = phase_error(estimate, truth)
    assert 0.0 <= report.mean_abs_error <= np.pi
    assert report.mean_abs_error == pytest.approx(np.pi / 2, abs=0.1)


def test_complex_estimates_use_only_their_angle(smooth_phase):
    phasors = 3.0 * np.exp(1j * smooth_phase.data)
    assert phase_error(phasors, smooth_phase).mean_abs_error < 1e-12


def test_mask_restricts_evaluation(smooth_phase):
    data = np.array(smooth_phase.data)
    data[:4] += 1.0
    mask = np.ones(data.shape, dtype=bool)
    mask[:4] = False
    assert phase_error(PhaseMap(data), smooth_phase, mask).mean_abs_error < 1e-12
    with pytest.raises(MetricError):
        phase_error(PhaseMap(data), smooth_phase, np.zeros(data.shape, dtype=bool))
    with pytest.raises(MetricError):
        phase_error(PhaseMap(data[:, :5]), smooth_phase)


def test_error_by_hop_skips_unreachable_pixels():
    truth = PhaseMap(np.zeros((1, 5)))
    estimate = PhaseMap(np.array([[0.0, 0.1, 0.2, 0.0, 0.0]]))
    hops = HopMap(np.array([[0, 1, 2, -1, 1]]), (0, 0))
    rows = error_vs_hop(estimate, truth, hops)
    assert [row.hop for row in rows] == [0, 1, 2]
    assert [row.count for row in rows] == [1, 2, 1]


def test_report_carries_per_hop_table():
    truth = PhaseMap(np.zeros((1, 4)))
    estimate = PhaseMap(np.array([[0.0, 0.0, 0.0, 0.0]]))
    hops = HopMap(np.array([[0, 1, 2, 3]]), (0, 0))
    report = phase_error(estimate, truth, hops=hops)
    assert [row.to_dict() for row in report.per_hop] == [
        {"hop": h, "mean_error": 0.0, "count": 1} for h in range(4)
    ]


def test_hop_monotonicity():
    rising = [HopErrorRow(hop=h, mean_error=0.01 * h, count=3) for h in range(6)]
    assert hop_monotonicity(rising) == pytest.approx(1.0)
    assert math.isnan(hop_monotonicity(rising[:1]))


def test_amplitude_mask_uses_the_peak():
    amplitude = np.array([[0.0, 0.05, 0.2, 2.0]])
    np.testing.assert_array_equal(amplitude_mask(amplitude, 0.1), [[False, False, True, True]])


def test_empirical_snr():
    clean = [np.full((4, 4), 2.0), np.full((4, 4), 1.0)]
    noisy = [frame + 0.1 for frame in clean]
    expected = 10 * math.log10((16 * 4 + 16 * 1) / (32 * 0.01))
    assert empirical_snr(clean, noisy) == pytest.approx(expected)
    assert math.isinf(empirical_snr(clean, clean))
    with pytest.raises(ValueError):
        empirical_snr(clean, noisy[:1])


def test_report_rows_follow_the_metric_schema():
    report = phase_error(PhaseMap(np.zeros((2, 2))), PhaseMap(np.zeros((2, 2))))
    provenance = {"phantom": "flat", "shifts": "0:1", "snr_db": math.inf, "n_meas": 8, "seed": 0}
    rows = list(report.to_rows(provenance))
    assert [row["metric"] for row in rows] == [
        "phase_error",
        "phase_error_std",
        "global_offset",
        "achieved_snr_db",
    ]
    assert all(row["status"] == "ok" and row["n_meas"] == 8 for row in rows)
