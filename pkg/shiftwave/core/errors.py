# shiftwave/core/errors.py

"""
Exception types for the shiftwave package.

Every error derives from both ShiftwaveError and the built-in type callers
would naturally catch, so ``except ValueError`` keeps working.
"""


class ShiftwaveError(Exception):
    """Base class for all shiftwave errors."""


class InvalidShiftError(ShiftwaveError, ValueError):
    """A shift vector is zero, too large for the grid, or otherwise unusable."""


class FieldFormatError(ShiftwaveError, ValueError):
    """A serialized field or image has a malformed header."""


class TruncatedFieldError(FieldFormatError):
    """A serialized field ends before its declared payload."""


class PhantomError(ShiftwaveError, ValueError):
    """A phantom specification cannot be generated."""


class NoiseCalibrationError(ShiftwaveError, ValueError):
    """The requested SNR cannot be reached under the noise model."""


class ExtractionError(ShiftwaveError, ValueError):
    """A measurement stack cannot be demodulated."""


class PropagationError(ShiftwaveError, ValueError):
    """Phase propagation cannot start from the requested reference."""


class RefinementError(ShiftwaveError, ValueError):
    """The least-squares refinement has nothing to solve."""


class MetricError(ShiftwaveError, ValueError):
    """A metric was requested over an empty or mismatched region."""


class ConfigError(ShiftwaveError, ValueError):
    """An experiment configuration is invalid."""


class ZeroReferenceError(ShiftwaveError, ValueError):
    """The point reference has zero amplitude."""
