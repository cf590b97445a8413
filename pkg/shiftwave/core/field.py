# shiftwave/core/field.py

"""
Core array types for complex fields and phase maps, plus the shift operator.

Pixels are stored 0-based in row-major numpy arrays. The centered index view
used by the graph theory is an offset of (H // 2, W // 2) on top of storage,
so the default reference pixel is ``centered_reference(shape)``.
"""

from dataclasses import dataclass, field
from typing import Dict, Iterator, List, Sequence, Tuple, Union

import numpy as np
from typing_extensions import Literal

from shiftwave.core.errors import InvalidShiftError

BoundaryMode = Literal["circular", "zero-fill"]
BOUNDARY_MODES: Tuple[str, ...] = ("circular", "zero-fill")

Shape = Tuple[int, int]
Pixel = Tuple[int, int]


def wrap_phase(values: np.ndarray) -> np.ndarray:
    """Wrap phases into [-pi, pi)."""
    return np.mod(np.asarray(values, dtype=np.float64) + np.pi, 2.0 * np.pi) - np.pi


def centered_reference(shape: Shape) -> Pixel:
    """Storage index of the centered origin for a grid of the given shape."""
    return (shape[0] // 2, shape[1] // 2)


def _validated_grid(data: np.ndarray, dtype: type, name: str) -> np.ndarray:
    array = np.array(data, dtype=dtype, copy=True)
    if array.ndim != 2:
        raise ValueError(f"Invalid {name}: expected a 2D grid, got {array.ndim}D")
    if array.shape[0] < 1 or array.shape[1] < 1:
        raise ValueError(f"Invalid {name} shape: {array.shape}")
    if not np.all(np.isfinite(array)):
        raise ValueError(f"Invalid {name}: samples must be finite")
    array.setflags(write=False)
    return array


@dataclass(frozen=True, eq=False)
class ComplexField:
    """A 2D grid of complex amplitudes x = |x| e^{j phi}.

    Attributes:
        data: Read-only complex128 array of shape (height, width).
    """

    data: np.ndarray

    def __post_init__(self) -> None:
        object.__setattr__(
            self, "data", _validated_grid(self.data, np.complex128, "field")
        )

    @classmethod
    def from_polar(cls, amplitude: np.ndarray, phase: np.ndarray) -> "ComplexField":
        """Build a field from amplitude and phase grids."""
        return cls(np.asarray(amplitude) * np.exp(1j * np.asarray(phase)))

    @property
    def height(self) -> int:
        return int(self.data.shape[0])

    @property
    def width(self) -> int:
        return int(self.data.shape[1])

    @property
    def shape(self) -> Shape:
        return (self.height, self.width)

    def amplitude(self) -> np.ndarray:
        return np.abs(self.data)

    def phase(self) -> "PhaseMap":
        """Wrapped phase of every sample (0 where the amplitude is 0)."""
        return PhaseMap(wrap_phase(np.angle(self.data)), wrapped=True)


@dataclass(frozen=True, eq=False)
class PhaseMap:
    """A 2D grid of phases in radians.

    Attributes:
        data: Read-only float64 array of shape (height, width).
        wrapped: When true every value lies in [-pi, pi).
    """

    data: np.ndarray
    wrapped: bool = False

    def __post_init__(self) -> None:
        array = _validated_grid(self.data, np.float64, "phase map")
        if self.wrapped and (np.any(array < -np.pi) or np.any(array >= np.pi)):
            raise ValueError("Invalid wrapped phase map: values outside [-pi, pi)")
        object.__setattr__(self, "data", array)

    @property
    def shape(self) -> Shape:
        return (int(self.data.shape[0]), int(self.data.shape[1]))

    def to_wrapped(self) -> "PhaseMap":
        if self.wrapped:
            return self
        return PhaseMap(wrap_phase(self.data), wrapped=True)

    def phasors(self) -> np.ndarray:
        """Unit phasors e^{j phi}."""
        return np.exp(1j * self.data)


@dataclass(frozen=True)
class ShiftVector:
    """Integer 2D shift (dy, dx) in pixels; (0, 0) is not a measurement shift."""

    dy: int
    dx: int

    def __post_init__(self) -> None:
        object.__setattr__(self, "dy", int(self.dy))
        object.__setattr__(self, "dx", int(self.dx))
        if self.dy == 0 and self.dx == 0:
            raise InvalidShiftError("Invalid shift: (0, 0) is not a measurement shift")

    @property
    def is_axis_aligned(self) -> bool:
        return self.dy == 0 or self.dx == 0

    @property
    def axis(self) -> str:
        """'h' for horizontal, 'v' for vertical, 'd' for diagonal shifts."""
        if self.dy == 0:
            return "h"
        if self.dx == 0:
            return "v"
        return "d"

    @property
    def magnitude(self) -> int:
        return max(abs(self.dy), abs(self.dx))

    def negated(self) -> "ShiftVector":
        return ShiftVector(-self.dy, -self.dx)

    def fits(self, shape: Shape) -> bool:
        return abs(self.dy) < shape[0] and abs(self.dx) < shape[1]

    def __str__(self) -> str:
        return f"{self.dy}:{self.dx}"

    @classmethod
    def parse(cls, text: str) -> "ShiftVector":
        """Parse ``"dy:dx"``."""
        try:
            dy, dx = (int(part) for part in text.strip().split(":"))
        except ValueError as e:
            raise InvalidShiftError(f"Invalid shift literal: {text!r}") from e
        return cls(dy, dx)


@dataclass(frozen=True)
class ShiftSet:
    """Ordered list of distinct shift vectors."""

    shifts: Tuple[ShiftVector, ...] = field(default_factory=tuple)

    def __post_init__(self) -> None:
        shifts = tuple(self.shifts)
        if len(set(shifts)) != len(shifts):
            raise InvalidShiftError(f"Invalid shift set: duplicate vectors in {shifts}")
        object.__setattr__(self, "shifts", shifts)

    def __len__(self) -> int:
        return len(self.shifts)

    def __iter__(self) -> Iterator[ShiftVector]:
        return iter(self.shifts)

    def __getitem__(self, index: int) -> ShiftVector:
        return self.shifts[index]

    @classmethod
    def from_magnitudes(cls, magnitudes: Sequence[int]) -> "ShiftSet":
        """One horizontal then one vertical shift per magnitude."""
        vectors: List[ShiftVector] = []
        for magnitude in magnitudes:
            vectors.append(ShiftVector(0, int(magnitude)))
            vectors.append(ShiftVector(int(magnitude), 0))
        return cls(tuple(vectors))

    @classmethod
    def parse(cls, text: str) -> "ShiftSet":
        """Parse a comma-separated list of ``dy:dx`` literals."""
        parts = [part for part in text.split(",") if part.strip()]
        return cls(tuple(ShiftVector.parse(part) for part in parts))

    @classmethod
    def from_list(cls, pairs: Sequence[Sequence[int]]) -> "ShiftSet":
        return cls(tuple(ShiftVector(int(dy), int(dx)) for dy, dx in pairs))

    def to_list(self) -> List[List[int]]:
        return [[s.dy, s.dx] for s in self.shifts]

    @property
    def is_axis_aligned(self) -> bool:
        return all(s.is_axis_aligned for s in self.shifts)

    def axis_magnitudes(self) -> Dict[str, List[int]]:
        """Magnitudes per axis ('h', 'v', and 'd' for diagonal vectors)."""
        table: Dict[str, List[int]] = {"h": [], "v": []}
        for s in self.shifts:
            table.setdefault(s.axis, []).append(s.magnitude)
        return table

    def magnitudes(self) -> List[int]:
        """Distinct magnitudes in first-seen order."""
        seen: List[int] = []
        for s in self.shifts:
            if s.magnitude not in seen:
                seen.append(s.magnitude)
        return seen

    def validate_for(self, shape: Shape) -> None:
        for s in self.shifts:
            if not s.fits(shape):
                raise InvalidShiftError(
                    f"Invalid shift {s} for grid {shape[0]}x{shape[1]}"
                )

    def label(self) -> str:
        return ",".join(str(s) for s in self.shifts)


GridLike = Union[ComplexField, np.ndarray]


def shift_array(
    array: np.ndarray, delta: ShiftVector, mode: BoundaryMode = "circular"
) -> np.ndarray:
    """Shift a 2D array so that output(i, j) = input(i - dy, j - dx).

    Args:
        array: Any 2D array.
        delta: Shift vector.
        mode: ``circular`` wraps indices, ``zero-fill`` writes 0 outside.

    Returns:
        A new array of the same shape and dtype.

    Raises:
        InvalidShiftError: If a shift magnitude reaches the grid dimension.
        ValueError: If the mode is unknown.
    """
    if mode not in BOUNDARY_MODES:
        raise ValueError(f"Unsupported boundary mode: {mode}")
    if not delta.fits(array.shape):
        raise InvalidShiftError(
            f"Invalid shift {delta} for grid {array.shape[0]}x{array.shape[1]}"
        )
    out = np.roll(array, (delta.dy, delta.dx), axis=(0, 1))
    if mode == "zero-fill":
        if delta.dy > 0:
            out[: delta.dy, :] = 0
        elif delta.dy < 0:
            out[delta.dy :, :] = 0
        if delta.dx > 0:
            out[:, : delta.dx] = 0
        elif delta.dx < 0:
            out[:, delta.dx :] = 0
    return out


def shift(
    field_in: ComplexField, delta: ShiftVector, mode: BoundaryMode = "circular"
) -> ComplexField:
    """Shift a complex field; see ``shift_array`` for the index convention."""
    return ComplexField(shift_array(field_in.data, delta, mode))


def shift_ahead(
    field_in: GridLike, delta: ShiftVector, mode: BoundaryMode = "circular"
) -> np.ndarray:
    """Self-reference copy: pixel i of the result holds input(i + delta)."""
    data = field_in.data if isinstance(field_in, ComplexField) else field_in
    return shift_array(np.asarray(data), delta.negated(), mode)


def identity(field_in: ComplexField) -> ComplexField:
    """The zero shift, which ShiftVector deliberately cannot express."""
    return field_in


def pair_slices(
    shape: Shape, delta: ShiftVector
) -> Tuple[Tuple[slice, slice], Tuple[slice, slice]]:
    """Slices selecting pixel pairs (i, i + delta) that both lie inside the grid.

    Returns:
        ``(base, ahead)`` so that ``array[base]`` holds the pixels i and
        ``array[ahead]`` the matching pixels i + delta.
    """
    height, width = shape
    dy, dx = delta.dy, delta.dx
    base = (
        slice(max(0, -dy), max(max(0, -dy), height - max(0, dy))),
        slice(max(0, -dx), max(max(0, -dx), width - max(0, dx))),
    )
    ahead = (
        slice(base[0].start + dy, base[0].stop + dy),
        slice(base[1].start + dx, base[1].stop + dx),
    )
    return base, ahead


def validity_mask(shape: Shape, delta: ShiftVector) -> np.ndarray:
    """True where both (i, j) and (i + dy, j + dx) lie inside the grid."""
    mask = np.zeros(shape, dtype=bool)
    if delta.fits(shape):
        base, _ = pair_slices(shape, delta)
        mask[base] = True
    return mask
