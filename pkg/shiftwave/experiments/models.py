# shiftwave/experiments/models.py

"""
Experiment configuration and per-seed outcomes.

A configuration is a flat JSON object. Every field has a default, and the
resolved configuration (defaults included) is echoed into meta.json so a run
never depends on implicit values.
"""

import math
from dataclasses import asdict, dataclass, field, fields
from pathlib import Path
from typing import Any, Dict, Iterator, List, Mapping, Optional, Union

from shiftwave.core import BOUNDARY_MODES, ConfigError, ShiftSet
from shiftwave.forward import NOISE_MODELS, NoiseSpec
from shiftwave.io import read_json
from shiftwave.metrics import ErrorReport, MetricRow, Provenance
from shiftwave.phantoms import PhantomGenerator, PhantomSpec
from shiftwave.propagate import AVERAGING_MODES, PhasePropagator
from shiftwave.shiftgraph import PLAN_SIZES, measurement_count, plan_2d, plan_named

PathLike = Union[str, Path]


@dataclass
class ExperimentConfig:
    """Everything that determines a run, apart from the seed.

    Attributes:
        phantom: Phase profile name.
        height: Grid rows.
        width: Grid columns.
        amplitude_source: ``uniform`` or a P5 image path.
        phantom_params: Profile parameter overrides.
        shifts: Explicit shift vectors as [dy, dx] pairs; overrides the planner.
        shift_preset: Named hardware preset; used when ``shifts`` is empty.
        n_shifts: Planner magnitude count (1, 2, 4 or 8).
        noise_model: ``none``, ``gaussian`` or ``poisson+gaussian``.
        snr_db: Target SNR of the captures.
        read_sigma_fraction: Read noise as a fraction of the mean intensity.
        seeds: Seeds to run; each seeds both the phantom and the noise.
        averaging: Equal-hop averaging rule.
        engine: Propagation engine.
        ls: Run least-squares refinement after propagation.
        lam: Tikhonov weight of the refinement.
        reliability_floor: Relative demodulation magnitude below which
            phasors are dropped.
        boundary: Boundary mode of the simulated shift.
        mask_threshold: Evaluate pixels whose amplitude exceeds this fraction
            of the peak; 0 evaluates every pixel.
        save_fields: Write per-seed field artifacts.
        out_dir: Output directory.
    """

    phantom: str = "quadratic"
    height: int = 128
    width: int = 128
    amplitude_source: str = "uniform"
    phantom_params: Dict[str, float] = field(default_factory=dict)
    shifts: List[List[int]] = field(default_factory=list)
    shift_preset: str = ""
    n_shifts: int = 2
    noise_model: str = "none"
    snr_db: float = 22.0
    read_sigma_fraction: float = 0.01
    seeds: List[int] = field(default_factory=lambda: [0])
    averaging: str = "mean"
    engine: str = "wavefront"
    ls: bool = False
    lam: float = 1e-3
    reliability_floor: float = 0.02
    boundary: str = "circular"
    mask_threshold: float = 0.0
    save_fields: bool = True
    out_dir: str = "runs"

    def __post_init__(self) -> None:
        self.validate()

    def validate(self) -> None:
        """Check enumerations and ranges.

        Raises:
            ConfigError: Any invalid field.
        """
        if self.phantom not in PhantomGenerator.kinds():
            raise ConfigError(f"Unsupported phantom kind: {self.phantom}")
        if self.noise_model not in NOISE_MODELS:
            raise ConfigError(f"Unsupported noise model: {self.noise_model}")
        if self.averaging not in AVERAGING_MODES:
            raise ConfigError(f"Unsupported averaging mode: {self.averaging}")
        if self.engine not in PhasePropagator.engines():
            raise ConfigError(f"Unsupported propagation engine: {self.engine}")
        if self.averaging == "pairwise" and self.engine != "bfs":
            raise ConfigError("Invalid config: pairwise averaging requires the bfs engine")
        if self.boundary not in BOUNDARY_MODES:
            raise ConfigError(f"Unsupported boundary mode: {self.boundary}")
        if not self.shifts and not self.shift_preset and self.n_shifts not in PLAN_SIZES:
            raise ConfigError(f"Invalid n_shifts: {self.n_shifts} (expected one of {PLAN_SIZES})")
        if not self.seeds:
            raise ConfigError("Invalid config: at least one seed is required")
        if self.lam < 0:
            raise ConfigError(f"Invalid lambda: {self.lam}")
        if self.reliability_floor < 0:
            raise ConfigError(f"Invalid reliability floor: {self.reliability_floor}")
        if not 0 <= self.mask_threshold < 1:
            raise ConfigError(f"Invalid mask threshold: {self.mask_threshold}")

    @classmethod
    def from_dict(cls, payload: Mapping[str, Any]) -> "ExperimentConfig":
        """Build a config from a flat mapping.

        Raises:
            ConfigError: Unknown keys or invalid values.
        """
        known = {f.name for f in fields(cls)}
        unknown = sorted(set(payload) - known)
        if unknown:
            raise ConfigError(f"Unknown config keys: {', '.join(unknown)}")
        try:
            return cls(**dict(payload))
        except TypeError as e:
            raise ConfigError(f"Invalid config: {e}") from e

    @classmethod
    def from_file(cls, path: PathLike) -> "ExperimentConfig":
        try:
            payload = read_json(path)
        except (OSError, ValueError) as e:
            raise ConfigError(f"Unreadable config {path}: {e}") from e
        if not isinstance(payload, dict):
            raise ConfigError(f"Invalid config {path}: expected a JSON object")
        return cls.from_dict(payload)

    def to_dict(self) -> Dict[str, Any]:
        return asdict(self)

    def replace(self, **changes: Any) -> "ExperimentConfig":
        payload = self.to_dict()
        payload.update(changes)
        return ExperimentConfig.from_dict(payload)

    def resolve_shifts(self) -> ShiftSet:
        """Explicit shifts, else the named preset, else the planner."""
        if self.shifts:
            shifts = ShiftSet.from_list(self.shifts)
            shifts.validate_for((self.height, self.width))
            return shifts
        if self.shift_preset:
            return plan_named(self.shift_preset, self.height, self.width)
        return plan_2d(self.height, self.width, self.n_shifts)

    def phantom_spec(self, seed: int) -> PhantomSpec:
        return PhantomSpec(
            kind=self.phantom,
            height=self.height,
            width=self.width,
            amplitude_source=self.amplitude_source,
            params=dict(self.phantom_params),
            rng_seed=seed,
        )

    def noise_spec(self, seed: int) -> NoiseSpec:
        return NoiseSpec(
            model=self.noise_model,
            target_snr_db=self.snr_db,
            read_sigma_fraction=self.read_sigma_fraction,
            rng_seed=seed,
        )

    @property
    def target_snr_db(self) -> float:
        """Nominal SNR, infinite for noiseless runs."""
        return math.inf if self.noise_model == "none" else float(self.snr_db)

    def provenance(self, seed: int) -> Provenance:
        try:
            shifts = self.resolve_shifts()
            label, n_meas = shifts.label(), measurement_count(shifts)
        except ValueError:
            label, n_meas = "invalid", 0
        return Provenance(
            phantom=self.phantom,
            shifts=label,
            snr_db=self.target_snr_db,
            n_meas=n_meas,
            seed=seed,
        )


@dataclass
class RunOutcome:
    """Result of one seed.

    Attributes:
        seed: Run seed.
        status: ``ok`` or ``error: <ExceptionName>: <message>``.
        report: Error of the propagated phase.
        refined: Error of the least-squares phase, when refinement ran.
        max_hop: Largest hop reached by propagation.
        iterations: Propagation expansion rounds.
        seconds: Wall-clock time of the run.
    """

    seed: int
    status: str = "ok"
    report: Optional[ErrorReport] = None
    refined: Optional[ErrorReport] = None
    max_hop: int = 0
    iterations: int = 0
    seconds: float = 0.0

    @property
    def ok(self) -> bool:
        return self.status == "ok"

    def to_rows(self, provenance: Provenance) -> Iterator[MetricRow]:
        """CSV rows; a failed seed yields a single NaN phase_error row."""
        if self.report is None:
            yield MetricRow(metric="phase_error", value=math.nan, status=self.status, **provenance)
            return
        yield from self.report.to_rows(provenance, self.status)
        if self.refined is not None:
            yield MetricRow(
                metric="phase_error_ls",
                value=self.refined.mean_abs_error,
                status=self.status,
                **provenance,
            )
            yield MetricRow(
                metric="phase_error_ls_std",
                value=self.refined.std,
                status=self.status,
                **provenance,
            )
        yield MetricRow(metric="max_hop", value=self.max_hop, status=self.status, **provenance)
        yield MetricRow(
            metric="iterations", value=self.iterations, status=self.status, **provenance
        )
