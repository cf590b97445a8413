# shiftwave/experiment_runner.py

"""
Runs experiments: seeds and sweep points execute concurrently on a thread
pool, each writing its own artifacts, and the runner writes the shared
meta.json, metrics.csv and timings.json once everything has finished.
"""

import asyncio
import logging
import math
from concurrent.futures import ThreadPoolExecutor
from pathlib import Path
from typing import Any, Callable, Dict, List, Optional, Sequence, Tuple, Union

from shiftwave import __version__
from shiftwave.core import ConfigError
from shiftwave.experiments import ExperimentConfig, RunOutcome, run_seed
from shiftwave.io import write_json, write_rows
from shiftwave.metrics import METRIC_COLUMNS, MetricRow
from shiftwave.settings import get_settings
from shiftwave.shiftgraph import PLAN_SIZES, PairSweepRow, measurement_count, pair_sweep

logger = logging.getLogger(__name__)

PathLike = Union[str, Path]

SWEEP_AXES: Tuple[str, ...] = ("snr", "n-meas", "t-shift")

# shifted captures per planned magnitude: two directions x four quadratures
_CAPTURES_PER_MAGNITUDE = 8


class ExperimentRunner:
    """Runs an ExperimentConfig over its seeds, or sweeps one axis of it."""

    def __init__(
        self,
        config: ExperimentConfig,
        out_dir: Optional[PathLike] = None,
        threads: Optional[int] = None,
    ):
        """Initialize the runner.

        Args:
            config: Base experiment configuration.
            out_dir: Output directory; ``config.out_dir`` when omitted.
            threads: Worker threads; ``SHIFTWAVE_THREADS`` when omitted.
        """
        self.config = config
        self.out_dir = Path(out_dir or config.out_dir)
        self.threads = threads or get_settings().threads

    async def _execute(self, jobs: Sequence[Callable[[], Any]]) -> List[Any]:
        loop = asyncio.get_running_loop()
        with ThreadPoolExecutor(max_workers=self.threads) as pool:
            futures = [loop.run_in_executor(pool, job) for job in jobs]
            return list(await asyncio.gather(*futures))

    def _meta(self, **extra: Any) -> Dict[str, Any]:
        meta: Dict[str, Any] = {"version": __version__, "config": self.config.to_dict()}
        try:
            shifts = self.config.resolve_shifts()
            meta["shifts"] = shifts.to_list()
            meta["n_meas"] = measurement_count(shifts)
        except ValueError as e:
            meta["shifts_error"] = str(e)
        meta.update(extra)
        return meta

    def _write(self, rows: List[MetricRow], timings: Dict[str, float]) -> None:
        write_rows(self.out_dir / "metrics.csv", rows, METRIC_COLUMNS)
        write_json(self.out_dir / "timings.json", timings)

    async def run(self) -> List[RunOutcome]:
        """Run every seed of the configuration.

        Returns:
            Outcomes in seed order.
        """
        write_json(self.out_dir / "meta.json", self._meta())
        config = self.config
        jobs = [
            (lambda seed=seed: run_seed(config, seed, self.out_dir / f"seed_{seed}"))
            for seed in config.seeds
        ]
        logger.info("Running %d seeds on %d threads", len(jobs), self.threads)
        outcomes: List[RunOutcome] = await self._execute(jobs)
        rows = [row for o in outcomes for row in o.to_rows(config.provenance(o.seed))]
        self._write(rows, {f"seed_{o.seed}": o.seconds for o in outcomes})
        return outcomes

    def point_config(self, axis: str, value: float) -> ExperimentConfig:
        """Configuration of one sweep point."""
        if axis == "snr":
            return self.config.replace(snr_db=float(value))
        if axis == "n-meas":
            count = int(value)
            n_shifts = count // _CAPTURES_PER_MAGNITUDE
            if count % _CAPTURES_PER_MAGNITUDE or n_shifts not in PLAN_SIZES:
                raise ConfigError(f"Unsupported measurement count: {value}")
            return self.config.replace(n_shifts=n_shifts, shifts=[], shift_preset="")
        raise ValueError(f"Unsupported sweep axis: {axis}")

    async def sweep(self, axis: str, values: Sequence[float]) -> List[Tuple[float, RunOutcome]]:
        """Cross every sweep value with every seed (snr and n-meas axes).

        Every point shares the base seeds; artifacts go to
        ``<axis>_<value>/seed_<n>/``.
        """
        if axis not in ("snr", "n-meas"):
            raise ValueError(f"Unsupported sweep axis: {axis}")
        points = [(value, self.point_config(axis, value)) for value in values]
        write_json(
            self.out_dir / "meta.json", self._meta(sweep_axis=axis, sweep_values=list(values))
        )
        keys, jobs = [], []
        for value, config in points:
            for seed in config.seeds:
                target = self.out_dir / f"{axis}_{value}" / f"seed_{seed}"
                keys.append((value, config))
                jobs.append(lambda c=config, s=seed, t=target: run_seed(c, s, t))
        outcomes: List[RunOutcome] = await self._execute(jobs)
        rows = [
            row
            for (value, config), outcome in zip(keys, outcomes)
            for row in outcome.to_rows(config.provenance(outcome.seed))
        ]
        timings = {
            f"{axis}_{value}/seed_{outcome.seed}": outcome.seconds
            for (value, _), outcome in zip(keys, outcomes)
        }
        self._write(rows, timings)
        return [(value, outcome) for (value, _), outcome in zip(keys, outcomes)]

    async def sweep_pairs(
        self,
        n: int,
        s_fixed: int,
        t_values: Sequence[int],
        trials: int,
        sigma: float,
    ) -> List[PairSweepRow]:
        """Second-shift sweep on a 1D line with simulated difference noise."""
        seed = self.config.seeds[0]
        write_json(
            self.out_dir / "meta.json",
            {
                "version": __version__,
                "sweep_axis": "t-shift",
                "n": n,
                "s": s_fixed,
                "t_values": list(t_values),
                "trials": trials,
                "sigma": sigma,
                "seed": seed,
                "averaging": self.config.averaging,
            },
        )
        jobs = [
            (
                lambda t=t: pair_sweep(
                    n, s_fixed, [t], trials, sigma, seed, self.config.averaging
                )[0]
            )
            for t in t_values
        ]
        results: List[PairSweepRow] = await self._execute(jobs)
        rows: List[MetricRow] = []
        for result in results:
            provenance = dict(
                phantom="line",
                shifts=f"0:{result.s},0:{result.t}",
                snr_db=math.nan,
                n_meas=4 * len({result.s, result.t}),
                seed=seed,
            )
            error = math.nan if result.mean_error is None else result.mean_error
            status = "ok" if result.connected else "disconnected"
            for metric, value in (
                ("line_mean_error", error),
                ("max_hop", result.max_hop),
                ("connected", int(result.connected)),
            ):
                rows.append(MetricRow(metric=metric, value=value, status=status, **provenance))
        write_rows(self.out_dir / "metrics.csv", rows, METRIC_COLUMNS)
        return results
