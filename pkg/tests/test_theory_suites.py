"""
Runs the executable theory suites at full size.
"""

import pytest

from shiftwave.shiftgraph import (
    run_all,
    verify_connectivity,
    verify_hop_lower_bound,
    verify_optimal_pair,
    verify_residue_coverage,
    verify_sliding_window,
)


@pytest.mark.parametrize(
    "suite",
    [
        verify_connectivity,
        verify_optimal_pair,
        verify_hop_lower_bound,
        verify_residue_coverage,
        verify_sliding_window,
    ],
)
def test_suite_passes(suite):
    check = suite()
    assert check.passed, check.failures
    assert check.cases > 0
    assert check.seconds >= 0.0


def test_quick_run_covers_every_suite():
    checks = run_all(quick=True)
    assert [c.name for c in checks] == [
        "connectivity",
        "optimal_pair",
        "hop_lower_bound",
        "residue_coverage",
        "sliding_window",
    ]
    assert all(c.passed for c in checks)
    assert all("ok" in c.summary() for c in checks)


def test_exhaustive_connectivity_case_count():
    check = verify_connectivity(exhaustive_max=6, random_cases=0)
    # co-prime s <= t with s + t <= N for N = 2..6
    assert check.cases == 1 + 2 + 3 + 5 + 6
