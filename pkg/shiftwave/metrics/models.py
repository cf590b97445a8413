# shiftwave/metrics/models.py

"""
Evaluation records and the CSV row schema.
"""

import math
from dataclasses import dataclass, field
from typing import Dict, Iterator, List, Tuple

from typing_extensions import TypedDict

METRIC_COLUMNS: Tuple[str, ...] = (
    "metric",
    "phantom",
    "shifts",
    "snr_db",
    "n_meas",
    "seed",
    "value",
    "status",
)


class MetricRow(TypedDict):
    """One scalar result with its full provenance.

    Attributes:
        metric: Metric name.
        phantom: Phantom kind.
        shifts: Shift set label.
        snr_db: Target SNR (inf for noiseless runs).
        n_meas: Number of shifted captures.
        seed: Run seed.
        value: Metric value.
        status: ``ok`` or the error that aborted the run.
    """

    metric: str
    phantom: str
    shifts: str
    snr_db: float
    n_meas: int
    seed: int
    value: float
    status: str


class Provenance(TypedDict):
    phantom: str
    shifts: str
    snr_db: float
    n_meas: int
    seed: int


@dataclass(frozen=True)
class HopErrorRow:
    """Mean absolute error of the pixels at one hop distance."""

    hop: int
    mean_error: float
    count: int

    def to_dict(self) -> Dict[str, float]:
        return {"hop": self.hop, "mean_error": self.mean_error, "count": self.count}


@dataclass
class ErrorReport:
    """Phase error after global phase correction.

    Attributes:
        mean_abs_error: Mean |wrapped error| in radians, within [0, pi].
        std: Standard deviation of |wrapped error|.
        theta: Global offset removed before measuring.
        per_hop: Optional error-by-hop table.
        achieved_snr_db: SNR of the captures the estimate came from.
    """

    mean_abs_error: float
    std: float
    theta: float
    per_hop: List[HopErrorRow] = field(default_factory=list)
    achieved_snr_db: float = math.nan

    def to_rows(self, provenance: Provenance, status: str = "ok") -> Iterator[MetricRow]:
        scalars = (
            ("phase_error", self.mean_abs_error),
            ("phase_error_std", self.std),
            ("global_offset", self.theta),
            ("achieved_snr_db", self.achieved_snr_db),
        )
        for name, value in scalars:
            yield MetricRow(metric=name, value=value, status=status, **provenance)
