"""
Tests for experiment configuration and the per-seed pipeline.
"""

import json
import math

import numpy as np
import pytest

from shiftwave.core import ConfigError
from shiftwave.experiments import ExperimentConfig, run_seed
from shiftwave.io import write_pgm


def _mean_errors(config: ExperimentConfig, refined: bool = False) -> float:
    outcomes = [run_seed(config, seed) for seed in config.seeds]
    assert all(o.ok for o in outcomes), [o.status for o in outcomes]
    reports = [o.refined if refined else o.report for o in outcomes]
    return float(np.mean([r.mean_abs_error for r in reports]))


def test_unknown_keys_are_rejected():
    with pytest.raises(ConfigError, match="Unknown config keys: colour"):
        ExperimentConfig.from_dict({"phantom": "flat", "colour": "red"})


@pytest.mark.parametrize(
    "changes",
    [
        {"phantom": "spiral"},
        {"noise_model": "shot"},
        {"engine": "dijkstra"},
        {"averaging": "pairwise"},
        {"n_shifts": 3},
        {"seeds": []},
        {"lam": -1.0},
        {"mask_threshold": 1.0},
    ],
)
def test_invalid_values_are_rejected(changes):
    with pytest.raises(ConfigError):
        ExperimentConfig.from_dict(changes)


def test_config_file(tmp_path):
    path = tmp_path / "config.json"
    path.write_text(json.dumps({"phantom": "peaks", "seeds": [3, 4], "ls": True}))
    config = ExperimentConfig.from_file(path)
    assert config.phantom == "peaks" and config.seeds == [3, 4] and config.ls
    assert config.replace(snr_db=13.0).snr_db == 13.0
    path.write_text("[1, 2]")
    with pytest.raises(ConfigError):
        ExperimentConfig.from_file(path)
    path.write_text("{not json")
    with pytest.raises(ConfigError):
        ExperimentConfig.from_file(path)


def test_shift_resolution_order():
    config = ExperimentConfig(shifts=[[0, 3]], shift_preset="hardware-16")
    assert config.resolve_shifts().to_list() == [[0, 3]]
    assert ExperimentConfig(shift_preset="hardware-16").resolve_shifts().magnitudes() == [24, 25]
    assert ExperimentConfig(n_shifts=2).resolve_shifts().magnitudes() == [8, 9]


def test_provenance():
    config = ExperimentConfig(noise_model="gaussian", snr_db=13.0)
    assert config.provenance(7) == {
        "phantom": "quadratic",
        "shifts": "0:8,8:0,0:9,9:0",
        "snr_db": 13.0,
        "n_meas": 16,
        "seed": 7,
    }
    assert math.isinf(ExperimentConfig().provenance(0)["snr_db"])
    assert ExperimentConfig(shifts=[[0, 500]]).provenance(0)["shifts"] == "invalid"


@pytest.mark.parametrize("phantom", ["quadratic", "random", "peaks"])
def test_noiseless_runs_are_exact(phantom):
    outcome = run_seed(ExperimentConfig(phantom=phantom, ls=True, lam=0.0), seed=0)
    assert outcome.ok
    assert outcome.report.mean_abs_error < 1e-6
    assert outcome.iterations == outcome.max_hop > 0


def test_failed_seed_reports_its_error():
    outcome = run_seed(ExperimentConfig(height=32, width=32, shifts=[[0, 40]]), seed=1)
    assert not outcome.ok
    assert outcome.status.startswith("error: InvalidShiftError")
    rows = list(outcome.to_rows(ExperimentConfig().provenance(1)))
    assert len(rows) == 1 and math.isnan(rows[0]["value"])


def test_unachievable_snr_is_a_seed_error():
    config = ExperimentConfig(
        height=32, width=32, noise_model="poisson+gaussian", snr_db=60.0, read_sigma_fraction=0.5
    )
    outcome = run_seed(config, seed=0)
    assert outcome.status.startswith("error: NoiseCalibrationError")


def test_fields_are_saved(tmp_path):
    config = ExperimentConfig(height=32, width=32, ls=True, noise_model="gaussian", snr_db=25.0)
    outcome = run_seed(config, seed=2, out_dir=tmp_path)
    assert outcome.ok
    names = {p.name for p in tmp_path.iterdir()}
    assert {"phase.srwf", "hops.srwf", "unreached.srwf", "truth.srwf", "amplitude.srwf", "phase_ls.srwf"} <= names
    metrics = [row["metric"] for row in outcome.to_rows(config.provenance(2))]
    assert metrics[-4:] == ["phase_error_ls", "phase_error_ls_std", "max_hop", "iterations"]


def test_amplitude_mask_threshold_limits_evaluation(tmp_path):
    image = np.zeros((32, 32))
    image[8:24, 8:24] = 1.0
    path = write_pgm(tmp_path / "amp.pgm", image)
    config = ExperimentConfig(
        height=32, width=32, amplitude_source=str(path), mask_threshold=0.5, reliability_floor=0.0
    )
    outcome = run_seed(config, seed=0)
    assert outcome.ok
    assert outcome.report.mean_abs_error < 1e-6


@pytest.fixture(scope="module")
def noisy_base():
    return ExperimentConfig(noise_model="poisson+gaussian", snr_db=22.0, seeds=list(range(20)))


def test_moderate_noise_error_range(noisy_base):
    error = _mean_errors(noisy_base)
    assert 0.03 <= error <= 0.30


def test_more_measurements_reduce_error(noisy_base):
    eight = _mean_errors(noisy_base.replace(n_shifts=1))
    sixteen = _mean_errors(noisy_base.replace(n_shifts=2))
    thirty_two = _mean_errors(noisy_base.replace(n_shifts=4))
    assert eight > sixteen > thirty_two


def test_least_squares_helps_at_low_snr(noisy_base):
    config = noisy_base.replace(snr_db=13.0, ls=True)
    assert _mean_errors(config, refined=True) < _mean_errors(config)
