"""
Tests for the Fourier least-squares refinement.
"""

import dataclasses
import logging

import numpy as np
import pytest
from scipy import fft

from shiftwave.core import PhaseMap, RefinementError, ShiftSet, ShiftVector, wrap_phase
from shiftwave.extract import synthetic_phasors
from shiftwave.metrics import phase_error
from shiftwave.phantoms import PhantomSpec, generate
from shiftwave.propagate import propagate_wavefront
from shiftwave.refine import (
    DEFAULT_LAMBDA,
    UnwrappedDifferences,
    difference,
    difference_filter,
    lambda_sweep,
    refine_ls,
    refine_pipeline,
    solve_ls,
    unwrap_differences,
)


def _diffs_from(grids, shifts) -> UnwrappedDifferences:
    masks = [np.ones(g.shape, dtype=bool) for g in grids]
    zeros = [np.zeros(g.shape, dtype=np.int64) for g in grids]
    return UnwrappedDifferences(
        shifts=shifts, unwrapped=list(grids), masks=masks, offsets=zeros, predicted=list(grids)
    )


def _circular_operator(shape, delta) -> np.ndarray:
    """Dense matrix of the circular difference phi(i) - phi(i + delta)."""
    height, width = shape
    size = height * width
    operator = np.eye(size)
    for i in range(height):
        for j in range(width):
            partner = ((i + delta.dy) % height) * width + (j + delta.dx) % width
            operator[i * width + j, partner] -= 1.0
    return operator


def test_difference_filter_matches_difference(rng):
    phase = rng.normal(size=(12, 10))
    delta = ShiftVector(3, -2)
    kernel = difference_filter(phase.shape, delta)
    convolved = np.real(fft.ifft2(fft.fft2(kernel) * fft.fft2(phase)))
    np.testing.assert_allclose(convolved, difference(phase, delta), atol=1e-12)


@pytest.mark.parametrize("lam", [1e-3, 0.5])
def test_matches_dense_normal_equations(lam):
    rng = np.random.default_rng(21)
    shape = (16, 16)
    for _ in range(10):
        shifts = ShiftSet(
            tuple(
                ShiftVector(int(dy), int(dx))
                for dy, dx in {tuple(v) for v in rng.integers(-5, 6, size=(3, 2))}
                if (dy, dx) != (0, 0)
            )
        )
        grids = [rng.normal(scale=2.0, size=shape) for _ in shifts]
        refined = refine_ls(_diffs_from(grids, shifts), shifts, lam)

        normal = lam * np.eye(256)
        rhs = np.zeros(256)
        for delta, grid in zip(shifts, grids):
            operator = _circular_operator(shape, delta)
            normal += operator.T @ operator
            rhs += operator.T @ grid.ravel()
        expected = np.linalg.solve(normal, rhs).reshape(shape)
        np.testing.assert_allclose(refined.data, expected, atol=1e-8)


def test_unregularized_solve_recovers_the_phase_up_to_its_mean(smooth_phase):
    shifts = ShiftSet.from_magnitudes([2, 3])
    grids = [difference(smooth_phase.data, delta) for delta in shifts]
    refined = refine_ls(_diffs_from(grids, shifts), shifts, lam=0.0)
    expected = smooth_phase.data - smooth_phase.data.mean()
    np.testing.assert_allclose(refined.data, expected, atol=1e-6)


def test_regularization_shrinks_each_frequency(smooth_phase):
    shifts = ShiftSet.from_magnitudes([2, 3])
    grids = [difference(smooth_phase.data, delta) for delta in shifts]
    lam = 1e-3
    refined = refine_ls(_diffs_from(grids, shifts), shifts, lam=lam)
    response = sum(np.abs(fft.fft2(difference_filter(smooth_phase.shape, d))) ** 2 for d in shifts)
    gain = response / (response + lam)
    gain[0, 0] = 0.0
    expected = np.real(fft.ifft2(fft.fft2(smooth_phase.data) * gain))
    np.testing.assert_allclose(refined.data, expected, atol=1e-9)
    centered = smooth_phase.data - smooth_phase.data.mean()
    assert np.max(np.abs(refined.data - centered)) <= lam / response[response > 0].min() * np.abs(centered).sum()


def test_zero_differences_give_a_flat_phase():
    shifts = ShiftSet.from_magnitudes([1])
    refined = refine_ls(_diffs_from([np.zeros((8, 8))] * 2, shifts), shifts)
    np.testing.assert_array_equal(refined.data, 0.0)


def test_unobservable_bins_are_zeroed_with_a_warning(caplog):
    shifts = ShiftSet((ShiftVector(0, 2),))
    with caplog.at_level(logging.WARNING, logger="shiftwave.refine.least_squares"):
        phase, dropped = solve_ls(_diffs_from([np.ones((4, 8))], shifts), shifts, lam=0.0)
    assert dropped == []
    assert np.all(np.isfinite(phase))
    assert "unobservable" in caplog.text


def test_unwrapping_is_blind_to_a_constant_offset(rng):
    truth = PhaseMap(rng.uniform(-np.pi, np.pi, size=(16, 16)))
    phasors = synthetic_phasors(truth, ShiftSet.from_magnitudes([2, 3]), sigma=0.2, rng=rng)
    estimate = propagate_wavefront(phasors).phase
    first = unwrap_differences(phasors, estimate)
    second = unwrap_differences(phasors, PhaseMap(estimate.data + 5.0))
    for k in range(len(phasors)):
        np.testing.assert_array_equal(first.offsets[k], second.offsets[k])
        np.testing.assert_allclose(first.unwrapped[k], second.unwrapped[k], atol=1e-12)
        mask = first.masks[k]
        lifted = np.exp(1j * first.unwrapped[k])
        np.testing.assert_allclose(lifted[mask], phasors.phasors[k][mask], atol=1e-9)


def test_noiseless_pipeline_keeps_the_propagated_phase():
    phantom = generate(PhantomSpec(kind="quadratic", height=32, width=32))
    phasors = synthetic_phasors(phantom.truth, ShiftSet.from_magnitudes([3, 4]))
    propagation = propagate_wavefront(phasors)
    refined = refine_pipeline(propagation, phasors, lam=0.0)
    assert refined.unwrapped.data[propagation.reference] == 0.0
    gap = np.angle(np.exp(1j * (refined.wrapped.data - propagation.phase.data)))
    assert np.max(np.abs(gap)) < 1e-6
    assert refined.dropped_shifts == ()


def test_default_weight_moves_clean_data_only_slightly():
    phantom = generate(PhantomSpec(kind="quadratic", height=32, width=32))
    phasors = synthetic_phasors(phantom.truth, ShiftSet.from_magnitudes([3, 4]))
    propagation = propagate_wavefront(phasors)
    refined = refine_pipeline(propagation, phasors)
    assert refined.lam == DEFAULT_LAMBDA
    gap = np.angle(np.exp(1j * (refined.wrapped.data - propagation.phase.data)))
    assert 1e-6 < np.max(np.abs(gap)) < 0.05


def test_refinement_beats_propagation_under_angle_noise():
    phantom = generate(PhantomSpec(kind="quadratic", height=64, width=64))
    rng = np.random.default_rng(8)
    phasors = synthetic_phasors(phantom.truth, ShiftSet.from_magnitudes([5, 6]), sigma=0.2, rng=rng)
    propagation = propagate_wavefront(phasors)
    refined = refine_pipeline(propagation, phasors)
    before = phase_error(propagation.phase, phantom.truth).mean_abs_error
    after = phase_error(refined.wrapped, phantom.truth).mean_abs_error
    assert after < before


def test_empty_shift_is_dropped_and_all_empty_fails(rng, caplog):
    truth = PhaseMap(rng.uniform(-np.pi, np.pi, size=(16, 16)))
    shifts = ShiftSet((ShiftVector(0, 1), ShiftVector(1, 0), ShiftVector(0, 2)))
    phasors = synthetic_phasors(truth, shifts)
    phasors.masks[2][:] = False
    propagation = propagate_wavefront(phasors)
    with caplog.at_level(logging.WARNING):
        refined = refine_pipeline(propagation, phasors)
    assert refined.dropped_shifts == (2,)
    assert "Dropping shift" in caplog.text
    for k in range(2):
        phasors.masks[k][:] = False
    with pytest.raises(RefinementError):
        refine_pipeline(propagation, phasors)


def test_invalid_inputs():
    shifts = ShiftSet.from_magnitudes([1])
    diffs = _diffs_from([np.zeros((8, 8))] * 2, shifts)
    with pytest.raises(RefinementError):
        refine_ls(diffs, shifts, lam=-1.0)
    with pytest.raises(RefinementError):
        refine_ls(diffs, ShiftSet(), lam=1e-3)


def test_lambda_sweep_reports_each_weight():
    phantom = generate(PhantomSpec(kind="peaks", height=32, width=32))
    rng = np.random.default_rng(3)
    phasors = synthetic_phasors(phantom.truth, ShiftSet.from_magnitudes([3, 4]), sigma=0.1, rng=rng)
    rows = lambda_sweep(propagate_wavefront(phasors), phasors, [0.0, 1e-3, 1.0], phantom.truth)
    assert [lam for lam, _ in rows] == [0.0, 1e-3, 1.0]
    assert all(0.0 <= error <= np.pi for _, error in rows)


@pytest.mark.parametrize("offset", [1.3, -2.9, np.pi / 2])
def test_refinement_ignores_a_constant_added_to_the_estimate(offset):
    rng = np.random.default_rng(5)
    truth = PhaseMap(rng.uniform(-np.pi, np.pi, size=(32, 32)))
    phasors = synthetic_phasors(truth, ShiftSet.from_magnitudes([3, 4]), sigma=0.3, rng=rng)
    propagation = propagate_wavefront(phasors)
    moved = dataclasses.replace(
        propagation,
        phase=PhaseMap(wrap_phase(propagation.phase.data + offset), wrapped=True),
    )
    first = refine_pipeline(propagation, phasors)
    second = refine_pipeline(moved, phasors)
    np.testing.assert_allclose(second.unwrapped.data, first.unwrapped.data, atol=1e-9)
    gap = np.angle(np.exp(1j * (second.wrapped.data - first.wrapped.data)))
    assert np.max(np.abs(gap)) < 1e-9


def _interior_rms(error: np.ndarray, margin: int) -> float:
    inner = error[margin:-margin, margin:-margin]
    return float(np.sqrt(np.mean((inner - inner.mean()) ** 2)))


def test_filled_wrap_pixels_stay_within_the_fill_error_of_the_circular_solve():
    phantom = generate(PhantomSpec(kind="quadratic", height=64, width=64))
    truth = phantom.truth.data
    rng = np.random.default_rng(17)
    shifts = ShiftSet.from_magnitudes([5, 6])
    phasors = synthetic_phasors(phantom.truth, shifts, sigma=0.1, rng=rng)

    # same measurements at valid pixels; the circular case also sees the wrap pixels
    circular = []
    for k, delta in enumerate(phasors.shifts):
        exact = difference(truth, delta)
        measured = exact + wrap_phase(np.angle(phasors.phasors[k]) - exact)
        circular.append(np.where(phasors.masks[k], measured, exact + rng.normal(0.0, 0.1, exact.shape)))

    drift = wrap_phase(propagate_wavefront(phasors).phase.data - truth)
    drift = wrap_phase(drift - np.angle(np.mean(np.exp(1j * drift))))
    estimate = truth + drift
    predicted = [difference(estimate, delta) for delta in phasors.shifts]
    masked = UnwrappedDifferences(
        shifts=phasors.shifts,
        unwrapped=circular,
        masks=[m.copy() for m in phasors.masks],
        offsets=[np.zeros(truth.shape, dtype=np.int64) for _ in phasors.shifts],
        predicted=predicted,
    )
    fill_only = [
        np.where(mask, 0.0, guess - value)
        for mask, guess, value in zip(phasors.masks, predicted, circular)
    ]

    from_circular = refine_ls(_diffs_from(circular, phasors.shifts), phasors.shifts).data
    from_masked = refine_ls(masked, phasors.shifts).data
    from_fill = refine_ls(_diffs_from(fill_only, phasors.shifts), phasors.shifts).data
    np.testing.assert_allclose(from_masked, from_circular + from_fill, atol=1e-9)

    margin = 12
    circular_error = _interior_rms(from_circular - truth, margin)
    masked_error = _interior_rms(from_masked - truth, margin)
    fill_bound = _interior_rms(from_fill, margin)
    assert 0.0 < circular_error < 0.2
    assert masked_error <= 1.1 * (circular_error + fill_bound)
