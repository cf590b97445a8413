# shiftwave/io/__init__.py

"""
File formats: SRWF grids, PGM images, JSON metadata and CSV tables.
"""

from shiftwave.io.artifacts import format_value, read_json, read_rows, write_json, write_rows
from shiftwave.io.pgm import center_crop, load_intensity, write_pgm
from shiftwave.io.srwf import (
    KIND_COMPLEX,
    KIND_REAL,
    decode_grid,
    encode_grid,
    read_field,
    read_grid,
    read_phase,
    storage_precision,
    write_field,
)

__all__ = [
    "KIND_COMPLEX",
    "KIND_REAL",
    "center_crop",
    "decode_grid",
    "encode_grid",
    "format_value",
    "load_intensity",
    "read_field",
    "read_grid",
    "read_json",
    "read_phase",
    "read_rows",
    "storage_precision",
    "write_field",
    "write_json",
    "write_pgm",
    "write_rows",
]
