# shiftwave/metrics/__init__.py

"""
Phase error, per-hop statistics and empirical SNR.
"""

from shiftwave.metrics.models import (
    METRIC_COLUMNS,
    ErrorReport,
    HopErrorRow,
    MetricRow,
    Provenance,
)
from shiftwave.metrics.phase_error import (
    amplitude_mask,
    corrected_errors,
    error_vs_hop,
    hop_monotonicity,
    phase_error,
)
from shiftwave.metrics.snr import empirical_snr

__all__ = [
    "ErrorReport",
    "HopErrorRow",
    "METRIC_COLUMNS",
    "MetricRow",
    "Provenance",
    "amplitude_mask",
    "corrected_errors",
    "empirical_snr",
    "error_vs_hop",
    "hop_monotonicity",
    "phase_error",
]
