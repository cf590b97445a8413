# shiftwave/core/__init__.py

"""
Core value types: complex fields, phase maps, shift vectors and hop maps.
"""

from shiftwave.core.errors import (
    ConfigError,
    ExtractionError,
    FieldFormatError,
    InvalidShiftError,
    MetricError,
    NoiseCalibrationError,
    PhantomError,
    PropagationError,
    RefinementError,
    ShiftwaveError,
    TruncatedFieldError,
    ZeroReferenceError,
)
from shiftwave.core.field import (
    BOUNDARY_MODES,
    BoundaryMode,
    ComplexField,
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
from shiftwave.core.hops import UNREACHABLE, HopMap

__all__ = [
    "BOUNDARY_MODES",
    "BoundaryMode",
    "ComplexField",
    "ConfigError",
    "ExtractionError",
    "FieldFormatError",
    "HopMap",
    "InvalidShiftError",
    "MetricError",
    "NoiseCalibrationError",
    "PhantomError",
    "PhaseMap",
    "PropagationError",
    "RefinementError",
    "ShiftSet",
    "ShiftVector",
    "ShiftwaveError",
    "TruncatedFieldError",
    "UNREACHABLE",
    "ZeroReferenceError",
    "centered_reference",
    "identity",
    "pair_slices",
    "shift",
    "shift_ahead",
    "shift_array",
    "validity_mask",
    "wrap_phase",
]
