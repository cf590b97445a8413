"""
Tests for line graphs, the closed-form shift theory and shift planning.
"""

import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from shiftwave.core import InvalidShiftError, PhaseMap, ShiftSet
from shiftwave.extract import synthetic_phasors
from shiftwave.propagate import propagate_wavefront
from shiftwave.shiftgraph import (
    LineGraph,
    connected_batch,
    coprime_guarantee,
    hop_distances,
    hop_lower_bound,
    is_connected,
    measurement_count,
    optimal_pair,
    pair_sweep,
    pixel_hop_distances,
    plan_2d,
    plan_magnitudes,
    plan_named,
    residue_coverage,
    sliding_window_chain,
    window_walk,
)


def test_centered_node_set():
    assert list(LineGraph(9, (1,)).nodes()) == list(range(-4, 5))
    assert list(LineGraph(8, (1,)).nodes()) == list(range(-4, 4))
    assert LineGraph(8, (1,)).to_index(0) == 4
    with pytest.raises(ValueError):
        LineGraph(8, (1,)).to_index(4)
    with pytest.raises(ValueError):
        LineGraph(8, (0, 2))


def test_edges_never_wrap():
    edges = list(LineGraph(5, (2,)).edges())
    assert edges == [(-2, 0), (-1, 1), (0, 2)]


@pytest.mark.parametrize(
    "n, shifts, max_hop",
    [(9, (1,), 4), (9, (2, 3), 2), (512, (16, 17), 16)],
)
def test_hop_distances(n, shifts, max_hop):
    hops = hop_distances(LineGraph(n, shifts))
    assert hops.is_complete
    assert hops.max_hop == max_hop
    assert hops.hops[hops.reference] == 0


def test_hops_from_an_offset_reference():
    hops = hop_distances(LineGraph(9, (1,)), reference=-4)
    assert hops.reference == (0,)
    assert hops.max_hop == 8


@pytest.mark.parametrize(
    "n, shifts, connected",
    [(11, (2, 3), True), (10, (2, 4), False), (4, (1, 5), True), (5, (5,), False)],
)
def test_connectivity(n, shifts, connected):
    assert is_connected(LineGraph(n, shifts)) is connected


def test_disconnected_graph_has_infinite_cover():
    hops = hop_distances(LineGraph(10, (2, 4)))
    assert math.isinf(hops.covering_hops)
    assert hops.max_hop == 1


def test_batch_connectivity_agrees_with_single_graphs():
    pairs = [(s, t) for s in range(1, 12) for t in range(1, 12)]
    batch = connected_batch(12, pairs)
    single = [is_connected(LineGraph(12, pair)) for pair in pairs]
    assert batch.tolist() == single
    with pytest.raises(ValueError):
        connected_batch(12, [(0, 3)])


def test_coprime_guarantee():
    assert coprime_guarantee(2, 3, 5)
    assert not coprime_guarantee(2, 3, 4)
    assert not coprime_guarantee(2, 4, 10)
    with pytest.raises(ValueError):
        coprime_guarantee(0, 3, 5)


def test_residue_coverage():
    assert residue_coverage(3, 7) == set(range(7))
    assert residue_coverage(4, 6) == {0, 2, 4}
    assert residue_coverage(4, 6, p=1) == {1, 3, 5}
    with pytest.raises(ValueError):
        residue_coverage(1, 0)


@settings(max_examples=200, deadline=None)
@given(st.integers(1, 80), st.integers(1, 80), st.integers(-200, 200))
def test_residue_coverage_is_full_exactly_for_coprime_steps(s, k, p):
    full = residue_coverage(s, k, p) == set(range(k))
    assert full == (math.gcd(s, k) == 1)


@pytest.mark.parametrize("n, bound", [(512, 16), (9, 2), (2, 1), (5, 1), (13, 2), (4096, 45)])
def test_hop_lower_bound(n, bound):
    assert hop_lower_bound(n) == bound


@settings(max_examples=100, deadline=None)
@given(st.integers(2, 100_000))
def test_hop_lower_bound_is_the_least_integer_solution(n):
    h = hop_lower_bound(n)
    assert (2 * h + 1) ** 2 >= 2 * n - 1
    assert h == 0 or (2 * h - 1) ** 2 < 2 * n - 1


@pytest.mark.parametrize("n, pair", [(512, (16, 17)), (64, (5, 6)), (256, (11, 12)), (8, (2, 3))])
def test_optimal_pair(n, pair):
    assert optimal_pair(n) == pair
    assert hop_distances(LineGraph(n, pair)).covering_hops == hop_lower_bound(n)


def test_optimal_pair_needs_eight_nodes():
    with pytest.raises(ValueError):
        optimal_pair(7)


def test_window_walk_visits_every_position():
    assert sorted(window_walk(3, 5)) == list(range(8))
    assert len(window_walk(2, 4)) < 6


def test_sliding_window_chain_reaches_the_origin():
    chain = sliding_window_chain(2, 3, 21, 10)
    assert chain[0] == (6, 10)
    assert chain[-1] == (0, 4)
    assert len(chain) == 7
    chain = sliding_window_chain(2, 3, 21, -10)
    assert chain[0] == (-10, -6)
    assert chain[-1] == (-4, 0)
    with pytest.raises(ValueError):
        sliding_window_chain(2, 3, 4, 0)


@pytest.mark.parametrize(
    "size, count, magnitudes",
    [
        (128, 1, [1]),
        (128, 2, [8, 9]),
        (512, 2, [16, 17]),
        (128, 4, [8, 9, 6, 10]),
        (128, 8, [4, 5, 6, 8, 3, 7, 9, 16]),
        (512, 8, [16, 17, 21, 33, 11, 22, 13, 63]),
    ],
)
def test_plan_magnitudes(size, count, magnitudes):
    assert plan_magnitudes(size, size, count) == magnitudes
    shifts = plan_2d(size, size, count)
    assert len(shifts) == 2 * count
    assert measurement_count(shifts) == 8 * count


def test_plan_uses_the_shorter_side():
    assert plan_magnitudes(64, 512, 2) == [5, 6]
    with pytest.raises(ValueError):
        plan_2d(128, 128, 3)


def test_plan_rejects_shifts_that_do_not_fit():
    with pytest.raises(InvalidShiftError):
        plan_named("hardware-16", 20, 20)


def test_hardware_presets():
    assert plan_named("hardware-16", 128, 128).magnitudes() == [24, 25]
    assert measurement_count(plan_named("hardware-24", 128, 128)) == 24
    with pytest.raises(ValueError):
        plan_named("hardware-99", 128, 128)


def test_planned_pixel_graph_is_connected():
    shifts = plan_2d(48, 40, 2)
    phasors = synthetic_phasors(PhaseMap(np.zeros((48, 40))), shifts)
    hops = pixel_hop_distances(phasors)
    assert hops.is_complete
    result = propagate_wavefront(phasors)
    np.testing.assert_array_equal(result.hops.hops, hops.hops)


def test_pair_sweep_structure():
    rows = pair_sweep(32, 4)
    assert [row.t for row in rows] == list(range(1, 32))
    by_t = {row.t: row for row in rows}
    assert by_t[5].connected and by_t[5].coprime_guarantee
    assert not by_t[6].connected and not by_t[6].coprime_guarantee
    assert by_t[4].max_hop == hop_distances(LineGraph(32, (4,))).max_hop
    assert all(row.mean_error is None for row in rows)
    with pytest.raises(ValueError):
        pair_sweep(32, 32)


def test_pair_sweep_simulates_connected_pairs_only():
    rows = pair_sweep(64, 5, t_values=[6, 10], trials=5, sigma=0.1)
    assert rows[0].mean_error is not None and 0 < rows[0].mean_error < 1.0
    assert rows[1].mean_error is None
    assert math.isnan(rows[1].to_dict()["mean_error"])


def test_shift_set_labels():
    shifts = ShiftSet.from_magnitudes([2, 3])
    assert shifts.label() == "0:2,2:0,0:3,3:0"
