# shiftwave/shiftgraph/verification.py

"""
Executable checks of the shift-graph theory.

Each suite enumerates (or samples) cases, compares the closed-form claim with
exact BFS or brute force, and returns a TheoryCheck listing every failure.
"""

import logging
import math
import time
from typing import Callable, List, Tuple

import numpy as np

from shiftwave.shiftgraph.graph import connected_batch, hop_distances
from shiftwave.shiftgraph.models import LineGraph, TheoryCheck
from shiftwave.shiftgraph.theory import (
    hop_lower_bound,
    optimal_pair,
    residue_coverage,
    sliding_window_chain,
    window_walk,
)

logger = logging.getLogger(__name__)

# cap on recorded failure messages per suite
_MAX_REPORTED = 20


def _record(check: TheoryCheck, message: str) -> None:
    if len(check.failures) < _MAX_REPORTED:
        check.failures.append(message)
    elif len(check.failures) == _MAX_REPORTED:
        check.failures.append("... further failures omitted")


def _timed(suite: Callable[..., TheoryCheck]) -> Callable[..., TheoryCheck]:
    def run(*args, **kwargs) -> TheoryCheck:
        start = time.perf_counter()
        check = suite(*args, **kwargs)
        check.seconds = time.perf_counter() - start
        logger.info(check.summary())
        return check

    run.__name__ = suite.__name__
    run.__doc__ = suite.__doc__
    return run


def _coprime_pairs(n: int) -> List[Tuple[int, int]]:
    return [
        (s, t)
        for s in range(1, n)
        for t in range(s, n - s + 1)
        if math.gcd(s, t) == 1
    ]


def _random_coprime_pair(n: int, rng: np.random.Generator) -> Tuple[int, int]:
    while True:
        s = int(rng.integers(1, n))
        t = int(rng.integers(1, n - s + 1))
        if math.gcd(s, t) == 1:
            return s, t


@_timed
def verify_connectivity(
    exhaustive_max: int = 256, random_cases: int = 10_000, random_max: int = 4096, seed: int = 0
) -> TheoryCheck:
    """Co-prime (s, t) with s + t <= N always connects the line graph."""
    check = TheoryCheck(name="connectivity")
    for n in range(2, exhaustive_max + 1):
        pairs = _coprime_pairs(n)
        connected = connected_batch(n, pairs)
        check.cases += len(pairs)
        for (s, t), ok in zip(pairs, connected):
            if not ok:
                _record(check, f"N={n} (s, t)=({s}, {t}) is disconnected")
    rng = np.random.default_rng(seed)
    for _ in range(random_cases):
        n = int(rng.integers(2, random_max + 1))
        s, t = _random_coprime_pair(n, rng)
        check.cases += 1
        if not connected_batch(n, [(s, t)])[0]:
            _record(check, f"N={n} (s, t)=({s}, {t}) is disconnected")
    return check


@_timed
def verify_optimal_pair(n_min: int = 8, n_max: int = 4096) -> TheoryCheck:
    """The optimal pair reaches every node in exactly hop_lower_bound(N) hops."""
    check = TheoryCheck(name="optimal_pair")
    for n in range(n_min, n_max + 1):
        pair = optimal_pair(n)
        covering = hop_distances(LineGraph(n, pair)).covering_hops
        bound = hop_lower_bound(n)
        check.cases += 1
        if covering != bound:
            _record(check, f"N={n} pair {pair}: max hop {covering} != bound {bound}")
    return check


@_timed
def verify_hop_lower_bound(cases: int = 10_000, n_max: int = 4096, seed: int = 0) -> TheoryCheck:
    """No pair of shifts covers N nodes in fewer than hop_lower_bound(N) hops."""
    check = TheoryCheck(name="hop_lower_bound")
    rng = np.random.default_rng(seed)
    for _ in range(cases):
        n = int(rng.integers(2, n_max + 1))
        s = int(rng.integers(1, n))
        t = int(rng.integers(1, n))
        covering = hop_distances(LineGraph(n, (s, t))).covering_hops
        bound = hop_lower_bound(n)
        check.cases += 1
        if covering < bound:
            _record(check, f"N={n} (s, t)=({s}, {t}): max hop {covering} < bound {bound}")
    return check


@_timed
def verify_residue_coverage(limit: int = 64) -> TheoryCheck:
    """Multiples of s cover every residue mod k exactly when gcd(s, k) = 1."""
    check = TheoryCheck(name="residue_coverage")
    for s in range(1, limit + 1):
        for k in range(1, limit + 1):
            for p in (0, s + k):
                full = residue_coverage(s, k, p) == set(range(k))
                check.cases += 1
                if full != (math.gcd(s, k) == 1):
                    _record(check, f"s={s} k={k} p={p}: full={full}, gcd={math.gcd(s, k)}")
    return check


@_timed
def verify_sliding_window(cases: int = 2_000, n_max: int = 4096, seed: int = 0) -> TheoryCheck:
    """Window chains stay inside V, overlap, start at p and end on 0; each
    window is internally connected by the +s / -t walk."""
    check = TheoryCheck(name="sliding_window")
    rng = np.random.default_rng(seed)
    for _ in range(cases):
        n = int(rng.integers(2, n_max + 1))
        s, t = _random_coprime_pair(n, rng)
        lowest, highest = -(n // 2), n - 1 - n // 2
        p = int(rng.integers(lowest, highest + 1))
        chain = sliding_window_chain(s, t, n, p)
        walk = window_walk(s, t)
        check.cases += 1
        label = f"N={n} (s, t)=({s}, {t}) p={p}"
        if any(start < lowest or end > highest for start, end in chain):
            _record(check, f"{label}: window leaves V")
        elif not chain[0][0] <= p <= chain[0][1]:
            _record(check, f"{label}: first window misses p")
        elif not chain[-1][0] <= 0 <= chain[-1][1]:
            _record(check, f"{label}: last window misses 0")
        elif any(b[0] > a[1] or a[0] > b[1] for a, b in zip(chain, chain[1:])):
            _record(check, f"{label}: consecutive windows do not overlap")
        elif sorted(walk) != list(range(s + t)):
            _record(check, f"{label}: walk visits {len(walk)} of {s + t} positions")
    return check


def run_all(quick: bool = False) -> List[TheoryCheck]:
    """Run every suite; ``quick`` shrinks the case counts for smoke runs."""
    if quick:
        return [
            verify_connectivity(exhaustive_max=48, random_cases=200, random_max=512),
            verify_optimal_pair(n_max=512),
            verify_hop_lower_bound(cases=200, n_max=512),
            verify_residue_coverage(limit=24),
            verify_sliding_window(cases=200, n_max=512),
        ]
    return [
        verify_connectivity(),
        verify_optimal_pair(),
        verify_hop_lower_bound(),
        verify_residue_coverage(),
        verify_sliding_window(),
    ]
