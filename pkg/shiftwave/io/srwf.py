# shiftwave/io/srwf.py

"""
SRWF binary grid format.

Layout: magic ``SRWF``, u32 little-endian height, u32 little-endian width,
u8 kind (0 = complex64 interleaved re/im, 1 = float32), then the row-major
payload in little-endian byte order.
"""

import struct
from pathlib import Path
from typing import Union

import numpy as np

from shiftwave.core import (
    ComplexField,
    FieldFormatError,
    PhaseMap,
    TruncatedFieldError,
    wrap_phase,
)

MAGIC = b"SRWF"
KIND_COMPLEX = 0
KIND_REAL = 1

_HEADER = struct.Struct("<4sIIB")
_DTYPES = {KIND_COMPLEX: np.dtype("<c8"), KIND_REAL: np.dtype("<f4")}
_MAX_PIXELS = 2**32 - 1

PathLike = Union[str, Path]
GridSource = Union[ComplexField, PhaseMap, np.ndarray]


def _grid_data(grid: GridSource) -> np.ndarray:
    data = grid.data if isinstance(grid, (ComplexField, PhaseMap)) else np.asarray(grid)
    if data.ndim != 2:
        raise FieldFormatError(f"Invalid grid: expected 2D, got {data.ndim}D")
    return data


def _kind(data: np.ndarray) -> int:
    return KIND_COMPLEX if np.iscomplexobj(data) else KIND_REAL


def storage_precision(grid: GridSource) -> np.ndarray:
    """The values SRWF would store, widened back to complex128 or float64.

    Data passed through this function survives write and read bit for bit.
    """
    data = _grid_data(grid)
    kind = _kind(data)
    widened = np.complex128 if kind == KIND_COMPLEX else np.float64
    return np.asarray(data, dtype=_DTYPES[kind]).astype(widened)


def encode_grid(grid: GridSource, exact: bool = False) -> bytes:
    """Serialize a grid; complex data becomes kind 0, real or boolean data kind 1.

    Samples are rounded to complex64 / float32. With ``exact`` a grid that
    loses bits in that rounding raises FieldFormatError instead.
    """
    data = _grid_data(grid)
    kind = _kind(data)
    height, width = data.shape
    stored = np.ascontiguousarray(data, dtype=_DTYPES[kind])
    if exact and not np.array_equal(stored, data):
        raise FieldFormatError(
            f"Grid is not representable as {_DTYPES[kind].name} without rounding"
        )
    return _HEADER.pack(MAGIC, height, width, kind) + stored.tobytes()


def decode_grid(blob: bytes) -> np.ndarray:
    """Parse SRWF bytes into a complex64 or float32 array.

    Raises:
        FieldFormatError: On bad magic, unknown kind or an impossible shape.
        TruncatedFieldError: When the payload is shorter than declared.
    """
    if len(blob) < _HEADER.size:
        raise TruncatedFieldError(
            f"Truncated SRWF header: {len(blob)} of {_HEADER.size} bytes"
        )
    magic, height, width, kind = _HEADER.unpack_from(blob)
    if magic != MAGIC:
        raise FieldFormatError(f"Invalid SRWF magic: {magic!r}")
    if kind not in _DTYPES:
        raise FieldFormatError(f"Invalid SRWF kind: {kind}")
    if height == 0 or width == 0 or height * width > _MAX_PIXELS:
        raise FieldFormatError(f"Invalid SRWF shape: {height}x{width}")
    dtype = _DTYPES[kind]
    expected = height * width * dtype.itemsize
    payload = blob[_HEADER.size :]
    if len(payload) < expected:
        raise TruncatedFieldError(
            f"Truncated SRWF payload: {len(payload)} of {expected} bytes"
        )
    return np.frombuffer(payload[:expected], dtype=dtype).reshape(height, width)


def write_field(path: PathLike, grid: GridSource, exact: bool = False) -> Path:
    """Write a field, phase map or plain 2D array to ``path`` (see encode_grid)."""
    target = Path(path)
    target.parent.mkdir(parents=True, exist_ok=True)
    target.write_bytes(encode_grid(grid, exact=exact))
    return target


def read_grid(path: PathLike) -> np.ndarray:
    """Read the raw array stored at ``path``."""
    return decode_grid(Path(path).read_bytes())


def read_field(path: PathLike) -> ComplexField:
    """Read a complex field (real payloads are promoted to complex)."""
    return ComplexField(read_grid(path))


def read_phase(path: PathLike, wrapped: bool = False) -> PhaseMap:
    """Read a kind-1 phase map."""
    data = read_grid(path)
    if np.iscomplexobj(data):
        raise FieldFormatError(f"Expected a real SRWF grid in {path}")
    if wrapped:
        # float32 rounding can land exactly on +pi
        return PhaseMap(wrap_phase(data), wrapped=True)
    return PhaseMap(data)
