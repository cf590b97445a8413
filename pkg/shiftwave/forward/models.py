# shiftwave/forward/models.py

"""
Measurement data structures: noise specification, calibration, the shifted
measurement stack and point-reference frames.
"""

import math
from dataclasses import dataclass, field
from pathlib import Path
from typing import Any, Dict, List, Optional, Tuple, Union

import numpy as np

from shiftwave.core import ShiftSet
from shiftwave.io import read_grid, read_json, write_field, write_json

NOISE_MODELS: Tuple[str, ...] = ("none", "gaussian", "poisson+gaussian")
QUADRATURES = 4

PathLike = Union[str, Path]


@dataclass
class NoiseSpec:
    """Noise model for simulated captures.

    Attributes:
        model: ``none``, ``gaussian`` or ``poisson+gaussian``.
        target_snr_db: Requested 10*log10(signal power / noise power).
        read_sigma_fraction: Read-noise sigma as a fraction of the mean intensity.
        rng_seed: Seed from which every frame's noise stream is derived.
    """

    model: str = "none"
    target_snr_db: float = 22.0
    read_sigma_fraction: float = 0.01
    rng_seed: int = 0

    def __post_init__(self) -> None:
        if self.model not in NOISE_MODELS:
            raise ValueError(f"Unsupported noise model: {self.model}")
        if not math.isfinite(self.target_snr_db):
            raise ValueError(f"Invalid target SNR: {self.target_snr_db}")
        if self.read_sigma_fraction < 0:
            raise ValueError(f"Invalid read sigma fraction: {self.read_sigma_fraction}")

    def to_dict(self) -> Dict[str, Any]:
        return {
            "model": self.model,
            "target_snr_db": self.target_snr_db,
            "read_sigma_fraction": self.read_sigma_fraction,
            "rng_seed": self.rng_seed,
        }


@dataclass(frozen=True)
class NoiseCalibration:
    """Noise parameters solved for one stack.

    Attributes:
        model: Noise model the parameters belong to.
        photon_scale: Poisson photon scale gamma (poisson+gaussian only).
        read_sigma: Additive Gaussian sigma (read noise, or the whole noise
            for the gaussian model).
        expected_snr_db: SNR the parameters produce in expectation.
    """

    model: str
    photon_scale: float = math.inf
    read_sigma: float = 0.0
    expected_snr_db: float = math.inf


def _frame_name(k: int, q: int) -> str:
    return f"y_k{k}_q{q}.srwf"


@dataclass
class MeasurementStack:
    """Intensity frames y_{k,q} plus one unshifted amplitude capture.

    Attributes:
        frames: (shift index, quadrature index) -> intensity grid.
        amplitude_frame: |x|^2 capture.
        shifts: Shift vectors the frames were taken with.
        noise: Noise specification used.
        achieved_snr_db: Empirical SNR over all captured pixels.
        boundary: Boundary mode of the simulated shift.
    """

    frames: Dict[Tuple[int, int], np.ndarray]
    amplitude_frame: np.ndarray
    shifts: ShiftSet
    noise: NoiseSpec = field(default_factory=NoiseSpec)
    achieved_snr_db: float = math.inf
    boundary: str = "circular"

    @property
    def shape(self) -> Tuple[int, int]:
        return (int(self.amplitude_frame.shape[0]), int(self.amplitude_frame.shape[1]))

    @property
    def n_meas(self) -> int:
        """Shifted captures: shift vectors x quadratures."""
        return len(self.frames)

    def missing_frames(self) -> List[Tuple[int, int]]:
        return [
            (k, q)
            for k in range(len(self.shifts))
            for q in range(QUADRATURES)
            if (k, q) not in self.frames
        ]

    def meta(self) -> Dict[str, Any]:
        return {
            "shape": list(self.shape),
            "shifts": self.shifts.to_list(),
            "noise": self.noise.to_dict(),
            "achieved_snr_db": self.achieved_snr_db,
            "boundary": self.boundary,
            "n_meas": self.n_meas,
        }

    def save(self, directory: PathLike) -> Path:
        """Write meta.json, one SRWF per frame and amp.srwf."""
        root = Path(directory)
        root.mkdir(parents=True, exist_ok=True)
        write_json(root / "meta.json", self.meta())
        for (k, q), frame in sorted(self.frames.items()):
            write_field(root / _frame_name(k, q), frame)
        write_field(root / "amp.srwf", self.amplitude_frame)
        return root

    @classmethod
    def load(cls, directory: PathLike) -> "MeasurementStack":
        root = Path(directory)
        meta = read_json(root / "meta.json")
        shifts = ShiftSet.from_list(meta["shifts"])
        frames = {}
        for k in range(len(shifts)):
            for q in range(QUADRATURES):
                path = root / _frame_name(k, q)
                if path.exists():
                    frames[(k, q)] = read_grid(path).astype(np.float64)
        return cls(
            frames=frames,
            amplitude_frame=read_grid(root / "amp.srwf").astype(np.float64),
            shifts=shifts,
            noise=NoiseSpec(**meta["noise"]),
            achieved_snr_db=float(meta["achieved_snr_db"]),
            boundary=meta.get("boundary", "circular"),
        )


@dataclass
class PointReferenceFrames:
    """Four phase-stepped captures against a single bright reference pixel.

    Attributes:
        frames: Quadrature index -> intensity grid.
        reference: Storage index of the reference pixel.
        reference_amplitude: |x(0)|.
        achieved_snr_db: Empirical SNR over the four frames.
    """

    frames: Dict[int, np.ndarray]
    reference: Tuple[int, int]
    reference_amplitude: float
    achieved_snr_db: float = math.inf
    calibration: Optional[NoiseCalibration] = None
