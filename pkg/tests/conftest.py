"""
Shared fixtures for the shiftwave test suite.
"""

import numpy as np
import pytest

from shiftwave.core import ComplexField, PhaseMap
from shiftwave.settings import get_settings


@pytest.fixture
def rng() -> np.random.Generator:
    return np.random.default_rng(1234)


@pytest.fixture
def random_field(rng) -> ComplexField:
    """32 x 32 field with amplitudes in [0.5, 1.5) and uniform random phase."""
    amplitude = rng.uniform(0.5, 1.5, size=(32, 32))
    phase = rng.uniform(-np.pi, np.pi, size=(32, 32))
    return ComplexField.from_polar(amplitude, phase)


@pytest.fixture
def smooth_phase() -> PhaseMap:
    """Unwrapped 24 x 20 phase with several turns across the grid."""
    rows, cols = np.mgrid[0:24, 0:20]
    return PhaseMap(0.05 * (rows - 11.5) ** 2 + 0.3 * cols - 0.02 * rows * cols)


@pytest.fixture(autouse=True)
def fresh_settings(monkeypatch):
    """Settings are cached per process; reset around every test."""
    monkeypatch.setenv("SHIFTWAVE_THREADS", "2")
    get_settings.cache_clear()
    yield
    get_settings.cache_clear()
