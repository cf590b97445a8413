# shiftwave/propagate/averaging.py

"""
Averaging rule for phasors arriving at one pixel with the same hop count.
"""

from typing import Sequence

import numpy as np

from shiftwave.propagate.models import TIE_MAGNITUDE


def resolve_mean(total: complex, count: int, first: complex) -> complex:
    """Complex mean of ``count`` arrivals summing to ``total``; falls back to
    the first arrival when the mean (nearly) cancels."""
    mean = total / count
    if abs(mean) < TIE_MAGNITUDE:
        return first
    return mean


def average_phasors(phasors: Sequence[complex]) -> complex:
    """Circular mean of equal-hop arrivals, magnitude retained.

    Raises:
        ValueError: If ``phasors`` is empty.
    """
    if len(phasors) == 0:
        raise ValueError("Cannot average an empty list of phasors")
    values = np.asarray(phasors, dtype=np.complex128)
    return complex(resolve_mean(complex(values.sum()), values.size, complex(values[0])))


def average_pair(current: complex, arrival: complex) -> complex:
    """Sequential avg(p, p') of two arrivals; keeps ``current`` on cancellation."""
    mean = 0.5 * (current + arrival)
    if abs(mean) < TIE_MAGNITUDE:
        return current
    return mean
