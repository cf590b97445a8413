# shiftwave/io/pgm.py

"""
Binary PGM (P5) intensity images, 8- or 16-bit.
"""

from pathlib import Path
from typing import List, Optional, Tuple, Union

import numpy as np

from shiftwave.core import FieldFormatError

PathLike = Union[str, Path]


def _read_header(blob: bytes) -> Tuple[int, int, int, int]:
    """Return (width, height, maxval, payload offset)."""
    tokens: List[bytes] = []
    pos = 0
    while len(tokens) < 4:
        if pos >= len(blob):
            raise FieldFormatError("Malformed PGM header: unexpected end of file")
        char = blob[pos : pos + 1]
        if char == b"#":
            end = blob.find(b"\n", pos)
            pos = len(blob) if end < 0 else end + 1
        elif char.isspace():
            pos += 1
        else:
            start = pos
            while pos < len(blob) and not blob[pos : pos + 1].isspace():
                pos += 1
            tokens.append(blob[start:pos])
    # exactly one whitespace byte separates maxval from the raster
    pos += 1
    if tokens[0] != b"P5":
        raise FieldFormatError(f"Malformed PGM header: magic {tokens[0]!r}")
    try:
        width, height, maxval = (int(t) for t in tokens[1:])
    except ValueError as e:
        raise FieldFormatError(f"Malformed PGM header: {tokens[1:]}") from e
    if width < 1 or height < 1:
        raise FieldFormatError(f"Malformed PGM header: size {width}x{height}")
    return width, height, maxval, pos


def center_crop(image: np.ndarray, height: int, width: int) -> np.ndarray:
    """Keep the central ``height`` x ``width`` window."""
    if height > image.shape[0] or width > image.shape[1]:
        raise ValueError(
            f"Invalid crop {height}x{width} for image {image.shape[0]}x{image.shape[1]}"
        )
    top = (image.shape[0] - height) // 2
    left = (image.shape[1] - width) // 2
    return image[top : top + height, left : left + width]


def load_intensity(
    path: PathLike, crop: Optional[Tuple[int, int]] = None
) -> np.ndarray:
    """Load a P5 image as float64 intensities in [0, 1].

    Args:
        path: Image file.
        crop: Optional (height, width) of a center crop.

    Returns:
        Pixel values divided by the header maxval.

    Raises:
        FieldFormatError: On a malformed header, an unsupported maxval or a
            short raster.
    """
    blob = Path(path).read_bytes()
    width, height, maxval, offset = _read_header(blob)
    if not 0 < maxval < 65536:
        raise FieldFormatError(f"Unsupported PGM maxval: {maxval}")
    dtype = np.dtype("u1") if maxval < 256 else np.dtype(">u2")
    count = width * height
    if len(blob) - offset < count * dtype.itemsize:
        raise FieldFormatError(
            f"Malformed PGM raster: expected {count * dtype.itemsize} bytes"
        )
    raster = np.frombuffer(blob, dtype=dtype, count=count, offset=offset)
    image = raster.reshape(height, width).astype(np.float64) / float(maxval)
    if crop is not None:
        image = center_crop(image, *crop)
    return image


def write_pgm(path: PathLike, image: np.ndarray, maxval: int = 255) -> Path:
    """Write intensities in [0, 1] as a P5 image with the given maxval."""
    if not 0 < maxval < 65536:
        raise FieldFormatError(f"Unsupported PGM maxval: {maxval}")
    dtype = np.dtype("u1") if maxval < 256 else np.dtype(">u2")
    values = np.rint(np.clip(np.asarray(image, dtype=np.float64), 0.0, 1.0) * maxval)
    height, width = values.shape
    header = f"P5\n{width} {height}\n{maxval}\n".encode("ascii")
    target = Path(path)
    target.parent.mkdir(parents=True, exist_ok=True)
    target.write_bytes(header + values.astype(dtype).tobytes())
    return target
