# shiftwave/shiftgraph/theory.py

"""
Closed-form results on two-shift line graphs.

All bounds use integer arithmetic (math.isqrt) so exact equalities can be
tested without float ceiling errors near perfect squares.
"""

import math
from typing import List, Set, Tuple


def coprime_guarantee(s: int, t: int, n: int) -> bool:
    """Sufficient condition for connectivity: gcd(s, t) = 1 and s + t <= n.

    False does not imply a disconnected graph.
    """
    if s < 1 or t < 1:
        raise ValueError(f"Invalid shifts ({s}, {t}): must be positive")
    return math.gcd(s, t) == 1 and s + t <= n


def residue_coverage(s: int, k: int, p: int = 0) -> Set[int]:
    """{(p + i s) mod k : i = 0..k-1}; the full residue set iff gcd(s, k) = 1."""
    if k < 1:
        raise ValueError(f"Invalid modulus: {k}")
    return {(p + i * s) % k for i in range(k)}


def hop_lower_bound(n: int) -> int:
    """ceil((-1 + sqrt(2n - 1)) / 2), the fewest hops two shifts can need on n nodes.

    Equivalently the least h with (2h + 1)^2 >= 2n - 1.
    """
    if n < 2:
        raise ValueError(f"Invalid node count for hop bound: {n}")
    m = 2 * n - 1
    root = math.isqrt(m)
    h = root // 2 if root * root == m else (root + 1) // 2
    # least h with (2h + 1)^2 >= m
    while h > 0 and (2 * h - 1) ** 2 >= m:
        h -= 1
    while (2 * h + 1) ** 2 < m:
        h += 1
    return h


def optimal_pair(n: int) -> Tuple[int, int]:
    """(s, s + 1) with s = floor(sqrt(n / 2))."""
    if n < 8:
        raise ValueError(f"Invalid node count for optimal pair: {n} (minimum 8)")
    # floor(sqrt(x)) == isqrt(floor(x)) for x >= 0
    s = math.isqrt(n // 2)
    return (s, s + 1)


def window_walk(s: int, t: int) -> List[int]:
    """Walk inside a window of s + t consecutive nodes starting at its left end:
    step +s while that stays inside, otherwise step -t.

    Returns:
        Window-relative positions visited, s + t of them when gcd(s, t) = 1.
    """
    width = s + t
    position = 0
    visited = [position]
    for _ in range(width - 1):
        position = position + s if position + s <= width - 1 else position - t
        if position in visited:
            break
        visited.append(position)
    return visited


def sliding_window_chain(s: int, t: int, n: int, p: int) -> List[Tuple[int, int]]:
    """Chain of windows of s + t nodes moving from node p to node 0.

    The first window starts at min(p, highest - s - t + 1) so it fits in V;
    every next window moves one node toward 0 until one contains 0.
    Consecutive windows overlap, so a connected window chain joins p to 0.

    Returns:
        Inclusive (start, end) pairs in centered coordinates.
    """
    if s < 1 or t < 1 or s + t > n:
        raise ValueError(f"Invalid window ({s}, {t}) for {n} nodes")
    lowest = -(n // 2)
    highest = n - 1 - n // 2
    if not lowest <= p <= highest:
        raise ValueError(f"Node {p} is outside [{lowest}, {highest}]")
    width = s + t
    start = min(p, highest - width + 1)
    chain = [(start, start + width - 1)]
    while not start <= 0 <= start + width - 1:
        start += -1 if start > 0 else 1
        chain.append((start, start + width - 1))
    return chain
