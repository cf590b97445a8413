# shiftwave/phantoms/models.py

"""
Data structures describing ground-truth phantoms.
"""

from dataclasses import dataclass, field
from typing import Any, Dict

from shiftwave.core import ComplexField, PhaseMap

UNIFORM_AMPLITUDE = "uniform"


@dataclass
class PhantomSpec:
    """Specification of a ground-truth complex field.

    Attributes:
        kind: Phase profile name (quadratic, random, peaks, lens, flat).
        height: Grid rows.
        width: Grid columns.
        amplitude_source: ``"uniform"`` or a path to a P5 intensity image.
        params: Profile-specific parameters; missing keys take profile defaults.
        rng_seed: Seed for random profiles.
    """

    kind: str = "quadratic"
    height: int = 128
    width: int = 128
    amplitude_source: str = UNIFORM_AMPLITUDE
    params: Dict[str, float] = field(default_factory=dict)
    rng_seed: int = 0

    def to_dict(self) -> Dict[str, Any]:
        return {
            "kind": self.kind,
            "height": self.height,
            "width": self.width,
            "amplitude_source": self.amplitude_source,
            "params": dict(self.params),
            "rng_seed": self.rng_seed,
        }


@dataclass(frozen=True)
class Phantom:
    """A generated field and the phase it was built from.

    Attributes:
        field: Complex field amplitude * e^{j truth}.
        truth: Unwrapped ground-truth phase.
        params: Profile parameters actually used (defaults filled in).
    """

    field: ComplexField
    truth: PhaseMap
    params: Dict[str, float]
