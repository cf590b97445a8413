# shiftwave/optics/models.py

"""
Parameters and results for free-space propagation.
"""

from dataclasses import dataclass, field, replace
from typing import Any, Dict, List, Tuple

from shiftwave.core import ComplexField

PROPAGATION_METHODS: Tuple[str, ...] = ("angular-spectrum",)


@dataclass(frozen=True)
class PropagationParams:
    """Scalar diffraction set-up.

    Attributes:
        wavelength: Meters (default 532 nm laser line).
        pitch: Sampling pitch in meters (default 3.45 um camera pixels).
        distance: Signed propagation distance z in meters.
        method: Only ``angular-spectrum``.
        padding: Integer zero-padding factor applied before transforming.
    """

    wavelength: float = 532e-9
    pitch: float = 3.45e-6
    distance: float = 0.0
    method: str = "angular-spectrum"
    padding: int = 1

    def __post_init__(self) -> None:
        if not self.wavelength > 0:
            raise ValueError(f"Invalid wavelength: {self.wavelength}")
        if not self.pitch > 0:
            raise ValueError(f"Invalid pixel pitch: {self.pitch}")
        if self.method not in PROPAGATION_METHODS:
            raise ValueError(f"Unsupported propagation method: {self.method}")
        if int(self.padding) != self.padding or self.padding < 1:
            raise ValueError(f"Invalid padding factor: {self.padding}")

    def at(self, distance: float) -> "PropagationParams":
        return replace(self, distance=float(distance))

    def to_dict(self) -> Dict[str, Any]:
        return {
            "wavelength": self.wavelength,
            "pitch": self.pitch,
            "distance": self.distance,
            "method": self.method,
            "padding": self.padding,
        }


@dataclass(frozen=True)
class RefocusResult:
    """Sharpness of the propagated intensity at every distance.

    Attributes:
        table: (z, sharpness) pairs in input order.
        best_z: Distance with the highest sharpness (first one on ties).
        best_field: Field propagated to ``best_z``.
        criterion: Sharpness criterion name.
    """

    table: List[Tuple[float, float]]
    best_z: float
    best_field: ComplexField
    criterion: str = "normalized_variance"

    def rows(self) -> List[Dict[str, float]]:
        return [{"z": z, "sharpness": s} for z, s in self.table]
