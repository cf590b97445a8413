"""
Tests for field types and the shift operator.
"""

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from shiftwave.core import (
    ComplexField,
    InvalidShiftError,
    PhaseMap,
    ShiftSet,
    ShiftVector,
    centered_reference,
    identity,
    pair_slices,
    shift,
    shift_ahead,
    shift_array,
    validity_mask,
    wrap_phase,
)


def test_shift_moves_content_forward():
    data = np.arange(12, dtype=float).reshape(3, 4)
    out = shift_array(data, ShiftVector(0, 1))
    # output(i, j) = input(i, j - 1)
    np.testing.assert_array_equal(out[:, 1:], data[:, :-1])
    np.testing.assert_array_equal(out[:, 0], data[:, -1])


def test_zero_fill_clears_wrapped_samples():
    data = np.ones((4, 5))
    out = shift_array(data, ShiftVector(1, -2), "zero-fill")
    assert np.all(out[0, :] == 0)
    assert np.all(out[:, -2:] == 0)
    assert out[1:, :-2].sum() == 3 * 3


def test_shift_ahead_pairs_pixel_with_its_neighbour():
    data = np.arange(20, dtype=float).reshape(4, 5)
    delta = ShiftVector(1, 2)
    ahead = shift_ahead(data, delta)
    assert ahead[0, 0] == data[1, 2]
    assert ahead[2, 1] == data[3, 3]


def test_zero_fill_copy_agrees_with_circular_inside_validity_mask(random_field):
    delta = ShiftVector(-3, 5)
    mask = validity_mask(random_field.shape, delta)
    circular = shift_ahead(random_field, delta, "circular")
    zero = shift_ahead(random_field, delta, "zero-fill")
    np.testing.assert_array_equal(circular[mask], zero[mask])
    assert np.all(zero[~mask] == 0)


def test_validity_mask_counts_pairs_inside_grid():
    mask = validity_mask((10, 8), ShiftVector(3, -2))
    assert mask.sum() == (10 - 3) * (8 - 2)
    assert not mask[9, 0]
    assert mask[0, 7]
    assert not mask[0, 0]


def test_pair_slices_match_validity_mask():
    shape = (7, 9)
    delta = ShiftVector(-2, 4)
    base, ahead = pair_slices(shape, delta)
    grid = np.arange(63).reshape(shape)
    rows, cols = np.nonzero(validity_mask(shape, delta))
    np.testing.assert_array_equal(grid[base].ravel(), grid[rows, cols])
    np.testing.assert_array_equal(grid[ahead].ravel(), grid[rows - 2, cols + 4])


def test_shift_rejects_oversized_vector():
    with pytest.raises(InvalidShiftError):
        shift_array(np.zeros((4, 4)), ShiftVector(0, 4))


def test_zero_shift_is_not_a_measurement_shift():
    with pytest.raises(InvalidShiftError):
        ShiftVector(0, 0)


def test_identity_returns_field(random_field):
    assert identity(random_field) is random_field


def test_shift_vector_parse_and_axis():
    delta = ShiftVector.parse(" 0:16 ")
    assert delta == ShiftVector(0, 16)
    assert delta.axis == "h"
    assert ShiftVector(5, 0).axis == "v"
    assert ShiftVector(2, 3).axis == "d"
    assert str(ShiftVector(-1, 7)) == "-1:7"
    with pytest.raises(InvalidShiftError):
        ShiftVector.parse("16")


def test_shift_set_from_magnitudes_orders_horizontal_first():
    shifts = ShiftSet.from_magnitudes([16, 17])
    assert shifts.to_list() == [[0, 16], [16, 0], [0, 17], [17, 0]]
    assert shifts.axis_magnitudes() == {"h": [16, 17], "v": [16, 17]}
    assert shifts.label() == "0:16,16:0,0:17,17:0"
    assert ShiftSet.parse(shifts.label()) == shifts


def test_shift_set_rejects_duplicates():
    with pytest.raises(InvalidShiftError):
        ShiftSet.from_list([[0, 1], [0, 1]])


def test_complex_field_is_read_only(random_field):
    with pytest.raises(ValueError):
        random_field.data[0, 0] = 0


def test_fields_reject_non_finite_and_non_2d():
    with pytest.raises(ValueError):
        ComplexField(np.zeros(5))
    with pytest.raises(ValueError):
        PhaseMap(np.array([[np.nan]]))
    with pytest.raises(ValueError):
        PhaseMap(np.array([[4.0]]), wrapped=True)


def test_wrap_phase_range():
    values = wrap_phase(np.array([np.pi, -np.pi, 3 * np.pi, 0.5]))
    assert np.all(values >= -np.pi) and np.all(values < np.pi)
    np.testing.assert_allclose(values[-1], 0.5)


def test_centered_reference():
    assert centered_reference((128, 128)) == (64, 64)
    assert centered_reference((9, 4)) == (4, 2)


@settings(max_examples=50, deadline=None)
@given(
    dy=st.integers(-6, 6),
    dx=st.integers(-6, 6),
    seed=st.integers(0, 2**16),
)
def test_circular_shift_is_invertible(dy, dx, seed):
    if dy == 0 and dx == 0:
        return
    delta = ShiftVector(dy, dx)
    data = np.random.default_rng(seed).normal(size=(7, 8))
    field = ComplexField(data)
    back = shift(shift(field, delta), delta.negated())
    np.testing.assert_array_equal(back.data, field.data)
