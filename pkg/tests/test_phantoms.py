"""
Tests for phantom generation.
"""

import numpy as np
import pytest

from shiftwave.core import PhantomError
from shiftwave.io import write_pgm
from shiftwave.phantoms import PhantomGenerator, PhantomSpec, generate, peaks_surface


def test_flat_phantom_is_all_ones_with_zero_phase():
    phantom = generate(PhantomSpec(kind="flat", height=16, width=12))
    assert phantom.field.shape == (16, 12)
    np.testing.assert_array_equal(phantom.truth.data, 0.0)
    np.testing.assert_array_equal(phantom.field.data, 1.0)


def test_random_phantom_is_seeded():
    spec = PhantomSpec(kind="random", height=32, width=32, rng_seed=9)
    first, second = generate(spec), generate(spec)
    np.testing.assert_array_equal(first.field.data, second.field.data)
    assert first.truth.data.min() >= -np.pi and first.truth.data.max() < np.pi
    other = generate(PhantomSpec(kind="random", height=32, width=32, rng_seed=10))
    assert not np.array_equal(first.truth.data, other.truth.data)


def test_peaks_value_at_origin():
    assert peaks_surface(0.0, 0.0) == pytest.approx(8.0 / 3.0 * np.exp(-1.0), abs=1e-12)
    phantom = generate(PhantomSpec(kind="peaks", height=9, width=9))
    assert phantom.truth.data[4, 4] == pytest.approx(0.9810, abs=1e-4)


def test_peaks_scale_parameter():
    base = generate(PhantomSpec(kind="peaks", height=16, width=16)).truth.data
    scaled = generate(PhantomSpec(kind="peaks", height=16, width=16, params={"scale": 2.5})).truth.data
    np.testing.assert_allclose(scaled, 2.5 * base)


def test_quadratic_spans_about_six_pi_and_is_symmetric():
    phase = generate(PhantomSpec(kind="quadratic", height=128, width=128)).truth.data
    span = phase.max() - phase.min()
    assert 5.5 * np.pi < span < 6.5 * np.pi
    np.testing.assert_allclose(phase, phase[::-1, ::-1], atol=1e-12)


def test_lens_phase_formula():
    params = {"wavelength": 500e-9, "focal_length": 0.1, "pitch": 4e-6}
    phase = generate(PhantomSpec(kind="lens", height=8, width=8, params=params)).truth.data
    r2 = (7 - 3.5) ** 2 + (0 - 3.5) ** 2
    expected = -np.pi / (500e-9 * 0.1) * r2 * (4e-6) ** 2
    assert phase[7, 0] == pytest.approx(expected)


def test_field_angle_matches_truth():
    phantom = generate(PhantomSpec(kind="quadratic", height=64, width=64))
    diff = np.angle(phantom.field.data * np.exp(-1j * phantom.truth.data))
    assert np.max(np.abs(diff)) < 1e-12


def test_unknown_kind_and_parameter():
    with pytest.raises(PhantomError):
        generate(PhantomSpec(kind="spiral"))
    with pytest.raises(PhantomError):
        generate(PhantomSpec(kind="quadratic", params={"beta": 1.0}))
    with pytest.raises(PhantomError):
        generate(PhantomSpec(kind="flat", height=4, width=16))


def test_amplitude_from_image(tmp_path):
    image = np.linspace(0.0, 1.0, 40 * 40).reshape(40, 40)
    path = write_pgm(tmp_path / "amp.pgm", image, maxval=65535)
    phantom = generate(PhantomSpec(kind="flat", height=20, width=20, amplitude_source=str(path)))
    np.testing.assert_allclose(phantom.field.amplitude(), image[10:30, 10:30], atol=1e-4)
    with pytest.raises(PhantomError):
        generate(PhantomSpec(kind="flat", height=64, width=64, amplitude_source=str(path)))


def test_registry_lists_kinds():
    assert set(PhantomGenerator.kinds()) == {"quadratic", "random", "peaks", "lens", "flat"}
