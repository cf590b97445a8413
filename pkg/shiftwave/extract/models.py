# shiftwave/extract/models.py

"""
Phase-difference phasor grids: the edges of the pixel shift graph.
"""

from dataclasses import dataclass
from pathlib import Path
from typing import Any, Dict, List, Tuple, Union

import numpy as np

from shiftwave.core import ShiftSet, ShiftVector
from shiftwave.io import read_grid, read_json, write_field, write_json

PathLike = Union[str, Path]


@dataclass
class PhasorGrid:
    """Per-shift unit phasors p_k with validity masks and reliabilities.

    ``angle(phasors[k][i]) ~ phi(i) - phi(i + shifts[k])`` wherever
    ``masks[k][i]`` is true; invalid pixels hold 0.

    Attributes:
        shifts: Shift vectors, one per grid.
        phasors: Complex grids, unit magnitude at valid pixels.
        masks: Boolean grids; true marks a usable edge (i, i + delta).
        reliability: Pre-normalization magnitudes |sum_q y_q e^{j phi_q}|.
    """

    shifts: ShiftSet
    phasors: List[np.ndarray]
    masks: List[np.ndarray]
    reliability: List[np.ndarray]

    def __post_init__(self) -> None:
        count = len(self.shifts)
        if not (len(self.phasors) == len(self.masks) == len(self.reliability) == count):
            raise ValueError(
                f"Invalid phasor grid: {count} shifts but {len(self.phasors)} phasor, "
                f"{len(self.masks)} mask and {len(self.reliability)} reliability grids"
            )
        shapes = {p.shape for p in self.phasors} | {m.shape for m in self.masks}
        if len(shapes) > 1:
            raise ValueError(f"Invalid phasor grid: inconsistent shapes {sorted(shapes)}")

    @property
    def shape(self) -> Tuple[int, int]:
        first = self.masks[0]
        return (int(first.shape[0]), int(first.shape[1]))

    def __len__(self) -> int:
        return len(self.shifts)

    def edges(self, k: int) -> Tuple[ShiftVector, np.ndarray, np.ndarray]:
        """(delta, phasors, mask) for shift k."""
        return self.shifts[k], self.phasors[k], self.masks[k]

    def valid_fraction(self) -> float:
        return float(np.mean([m.mean() for m in self.masks]))

    def meta(self) -> Dict[str, Any]:
        return {"shape": list(self.shape), "shifts": self.shifts.to_list()}

    def save(self, directory: PathLike) -> Path:
        """Write p_k<k>.srwf, mask_k<k>.srwf and rel_k<k>.srwf per shift."""
        root = Path(directory)
        root.mkdir(parents=True, exist_ok=True)
        write_json(root / "phasors.json", self.meta())
        for k in range(len(self.shifts)):
            write_field(root / f"p_k{k}.srwf", self.phasors[k])
            write_field(root / f"mask_k{k}.srwf", self.masks[k].astype(np.float32))
            write_field(root / f"rel_k{k}.srwf", self.reliability[k])
        return root

    @classmethod
    def load(cls, directory: PathLike) -> "PhasorGrid":
        root = Path(directory)
        shifts = ShiftSet.from_list(read_json(root / "phasors.json")["shifts"])
        masks = [read_grid(root / f"mask_k{k}.srwf") > 0.5 for k in range(len(shifts))]
        phasors = []
        for k, mask in enumerate(masks):
            raw = read_grid(root / f"p_k{k}.srwf").astype(np.complex128)
            # complex64 storage; restore unit magnitude
            magnitude = np.abs(raw)
            phasors.append(np.where(mask, raw / np.where(magnitude > 0, magnitude, 1), 0))
        reliability = [
            read_grid(root / f"rel_k{k}.srwf").astype(np.float64) for k in range(len(shifts))
        ]
        return cls(shifts=shifts, phasors=phasors, masks=masks, reliability=reliability)
