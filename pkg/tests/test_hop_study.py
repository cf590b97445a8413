"""
Error accumulation along hops on 1D line graphs.
"""

import numpy as np
import pytest

from shiftwave.core import HopMap, PhaseMap
from shiftwave.metrics import hop_monotonicity
from shiftwave.shiftgraph import (
    final_hop_error,
    hop_error_curve,
    line_mean_error,
    line_shifts,
    line_trial,
    referenced_errors,
)

N = 512
SIGMA = 0.1
TRIALS = 200


@pytest.fixture(scope="module")
def curves():
    return {
        shifts: hop_error_curve(N, shifts, SIGMA, TRIALS, seed=0)
        for shifts in [(1,), (2, 3), (16, 17)]
    }


def test_error_grows_with_hops(curves):
    assert hop_monotonicity(curves[(1,)]) > 0.9
    assert curves[(1,)][0].hop == 0 and curves[(1,)][0].mean_error == 0.0


def test_more_efficient_pairs_end_with_less_error(curves):
    assert final_hop_error(curves[(16, 17)]) < final_hop_error(curves[(2, 3)])
    assert final_hop_error(curves[(2, 3)]) < final_hop_error(curves[(1,)])


def test_optimal_pair_covers_in_sixteen_hops(curves):
    assert max(row.hop for row in curves[(16, 17)]) == 16
    assert max(row.hop for row in curves[(1,)]) == N // 2
    assert sum(row.count for row in curves[(16, 17)]) == N * TRIALS


def test_mean_averaging_never_hurts_at_any_hop(curves):
    averaged = curves[(2, 3)]
    first_arrival = hop_error_curve(N, (2, 3), SIGMA, TRIALS, seed=0, averaging="none")
    assert [r.hop for r in averaged] == [r.hop for r in first_arrival]
    assert [r.count for r in averaged] == [r.count for r in first_arrival]
    for mean, none in zip(averaged, first_arrival):
        assert mean.mean_error <= 1.05 * none.mean_error + 1e-3, mean.hop
    assert line_mean_error(N, (2, 3), SIGMA, 50, averaging="mean") <= line_mean_error(
        N, (2, 3), SIGMA, 50, averaging="none"
    ) + 0.005


def test_averaging_is_moot_for_a_single_shift():
    mean = hop_error_curve(64, (1,), SIGMA, 20, averaging="mean")
    none = hop_error_curve(64, (1,), SIGMA, 20, averaging="none")
    assert mean == none


def test_engines_give_the_same_curve():
    wavefront = hop_error_curve(96, (3, 4), SIGMA, 10, engine="wavefront")
    queued = hop_error_curve(96, (3, 4), SIGMA, 10, engine="bfs")
    assert [r.hop for r in wavefront] == [r.hop for r in queued]
    np.testing.assert_allclose(
        [r.mean_error for r in wavefront], [r.mean_error for r in queued], atol=1e-9
    )


def _pooled(rows):
    return sum(r.mean_error * r.count for r in rows) / sum(r.count for r in rows)


def test_von_mises_noise_behaves_like_gaussian():
    gaussian = hop_error_curve(128, (1,), SIGMA, 100, distribution="gaussian")
    vonmises = hop_error_curve(128, (1,), SIGMA, 100, distribution="vonmises")
    assert _pooled(vonmises) == pytest.approx(_pooled(gaussian), rel=0.15)


def test_noiseless_trial_is_exact(rng):
    errors, hops = line_trial(33, line_shifts([2, 5, 2]), 0.0, rng)
    assert hops.is_complete
    assert errors.max() < 1e-9


def test_line_shifts_are_horizontal_and_unique():
    assert line_shifts([3, 1, 3]).to_list() == [[0, 1], [0, 3]]


def test_referenced_errors_zero_the_reference():
    truth = PhaseMap(np.array([[0.5, 1.0, 1.5]]))
    estimate = PhaseMap(np.array([[-0.5, 0.0, 0.7]]))
    errors = referenced_errors(estimate, truth, HopMap(np.array([[1, 0, 1]]), (0, 1)))
    np.testing.assert_allclose(errors, [[0.0, 0.0, 0.2]], atol=1e-12)


def test_trial_count_must_be_positive():
    with pytest.raises(ValueError):
        hop_error_curve(32, (1,), SIGMA, 0)
