# shiftwave/experiments/pipeline.py

"""
One seed of an experiment: phantom -> forward -> extract -> propagate ->
(refine) -> metrics.
"""

import logging
import time
from pathlib import Path
from typing import Optional, Union

from shiftwave.core import ShiftwaveError
from shiftwave.experiments.models import ExperimentConfig, RunOutcome
from shiftwave.extract import extract_phasors
from shiftwave.forward import simulate_shifted
from shiftwave.io import write_field
from shiftwave.metrics import amplitude_mask, phase_error
from shiftwave.phantoms import generate
from shiftwave.propagate import PhasePropagator
from shiftwave.refine import refine_pipeline

logger = logging.getLogger(__name__)

PathLike = Union[str, Path]


def error_status(error: Exception) -> str:
    return f"error: {type(error).__name__}: {error}"


def run_seed(
    config: ExperimentConfig, seed: int, out_dir: Optional[PathLike] = None
) -> RunOutcome:
    """Run the full pipeline for one seed.

    Module errors abort the seed and are returned in ``status``; they are not
    raised.

    Args:
        config: Experiment configuration.
        seed: Seed for the phantom and the noise.
        out_dir: Directory for field artifacts; nothing is written when None
            or when ``config.save_fields`` is false.
    """
    start = time.perf_counter()
    outcome = RunOutcome(seed=seed)
    try:
        phantom = generate(config.phantom_spec(seed))
        shifts = config.resolve_shifts()
        stack = simulate_shifted(
            phantom.field, shifts, config.noise_spec(seed), config.boundary
        )
        phasors = extract_phasors(stack, config.reliability_floor)
        result = PhasePropagator(config.engine, config.averaging).propagate(phasors)

        mask = None
        if config.mask_threshold > 0:
            mask = amplitude_mask(phantom.field.amplitude(), config.mask_threshold)
        outcome.report = phase_error(result.phase, phantom.truth, mask, hops=result.hops)
        outcome.report.achieved_snr_db = stack.achieved_snr_db
        outcome.max_hop = result.hops.max_hop
        outcome.iterations = result.iterations

        refined = None
        if config.ls:
            refined = refine_pipeline(result, phasors, lam=config.lam)
            outcome.refined = phase_error(refined.wrapped, phantom.truth, mask)

        if out_dir is not None and config.save_fields:
            root = Path(out_dir)
            result.save(root)
            write_field(root / "truth.srwf", phantom.truth)
            write_field(root / "amplitude.srwf", phantom.field.amplitude())
            if refined is not None:
                write_field(root / "phase_ls.srwf", refined.unwrapped)
    except (ShiftwaveError, ValueError) as e:
        logger.error("Seed %d failed: %s", seed, e)
        outcome.status = error_status(e)
    outcome.seconds = time.perf_counter() - start
    if outcome.ok:
        logger.info(
            "Seed %d: error %.4f rad, max hop %d",
            seed,
            outcome.report.mean_abs_error,
            outcome.max_hop,
        )
    return outcome
