# shiftwave/shiftgraph/models.py

"""
Data structures for the 1D shift-graph theory and its verification.
"""

import math
from dataclasses import dataclass, field
from typing import Any, Dict, Iterator, List, Optional, Tuple



@dataclass(frozen=True)
class LineGraph:
    """Nodes V = {-floor(N/2), ..., N - 1 - floor(N/2)}; edges join nodes whose
    distance is one of the shifts.

    Attributes:
        n: Node count N.
        shifts: Positive shift magnitudes s_k.
    """

    n: int
    shifts: Tuple[int, ...]

    def __post_init__(self) -> None:
        if self.n < 1:
            raise ValueError(f"Invalid node count: {self.n}")
        shifts = tuple(int(s) for s in self.shifts)
        if any(s < 1 for s in shifts):
            raise ValueError(f"Invalid shifts {shifts}: magnitudes must be positive")
        object.__setattr__(self, "shifts", shifts)

    @property
    def offset(self) -> int:
        """Storage index of centered node 0."""
        return self.n // 2

    @property
    def lowest(self) -> int:
        return -self.offset

    @property
    def highest(self) -> int:
        return self.n - 1 - self.offset

    def nodes(self) -> range:
        return range(self.lowest, self.highest + 1)

    def contains(self, node: int) -> bool:
        return self.lowest <= node <= self.highest

    def to_index(self, node: int) -> int:
        if not self.contains(node):
            raise ValueError(f"Node {node} is outside [{self.lowest}, {self.highest}]")
        return node + self.offset

    def to_node(self, index: int) -> int:
        return index - self.offset

    def edges(self) -> Iterator[Tuple[int, int]]:
        """Non-wrapping edges (i, i + s) in centered coordinates."""
        for s in sorted(set(self.shifts)):
            for i in range(self.lowest, self.highest - s + 1):
                yield (i, i + s)


@dataclass(frozen=True)
class PairSweepRow:
    """One second-shift candidate t for a fixed first shift s.

    Attributes:
        s: Fixed shift.
        t: Candidate shift.
        max_hop: Largest finite hop from the centered reference.
        connected: Every node reachable.
        coprime_guarantee: gcd(s, t) = 1 and s + t <= N.
        mean_error: Monte-Carlo mean absolute phase error, when simulated.
    """

    s: int
    t: int
    max_hop: int
    connected: bool
    coprime_guarantee: bool
    mean_error: Optional[float] = None

    def to_dict(self) -> Dict[str, Any]:
        return {
            "s": self.s,
            "t": self.t,
            "max_hop": self.max_hop,
            "connected": self.connected,
            "coprime_guarantee": self.coprime_guarantee,
            "mean_error": math.nan if self.mean_error is None else self.mean_error,
        }


@dataclass
class TheoryCheck:
    """Outcome of one executable theory suite.

    Attributes:
        name: Suite name.
        cases: Number of cases evaluated.
        failures: Human-readable description of every failing case.
        seconds: Wall-clock time spent.
    """

    name: str
    cases: int = 0
    failures: List[str] = field(default_factory=list)
    seconds: float = 0.0

    @property
    def passed(self) -> bool:
        return not self.failures

    def summary(self) -> str:
        verdict = "ok" if self.passed else f"FAILED ({len(self.failures)})"
        return f"{self.name}: {self.cases} cases, {verdict}, {self.seconds:.1f}s"
