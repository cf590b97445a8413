# shiftwave/cli.py

"""
Command-line driver.

Subcommands: plan, simulate, reconstruct, refine, run, sweep, refocus,
verify-theory and diffuser. Every artifact is written under ``--out``.
"""

import argparse
import asyncio
import logging
import sys
from pathlib import Path
from typing import Any, Callable, Dict, List, Optional, Sequence, Tuple

from shiftwave.core import PhaseMap, ShiftSet, ShiftwaveError
from shiftwave.experiment_runner import SWEEP_AXES, ExperimentRunner
from shiftwave.experiments import ExperimentConfig
from shiftwave.extract import extract_phasors, recover_amplitude
from shiftwave.forward import NOISE_MODELS, MeasurementStack, simulate_shifted
from shiftwave.io import read_field, read_phase, write_field, write_json, write_rows
from shiftwave.metrics import phase_error
from shiftwave.optics import (
    SHARPNESS_CRITERIA,
    PropagationParams,
    diffuser_experiment,
    refocus_sweep,
    z_range,
)
from shiftwave.phantoms import PhantomGenerator, generate
from shiftwave.propagate import AVERAGING_MODES, PhasePropagator, PropagationResult
from shiftwave.refine import refine_pipeline
from shiftwave.settings import configure_logging, get_settings
from shiftwave.shiftgraph import (
    HARDWARE_PRESETS,
    LineGraph,
    PLAN_SIZES,
    hop_distances,
    hop_lower_bound,
    measurement_count,
    optimal_pair,
    plan_2d,
    plan_named,
    run_all,
)

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_FAILED = 1
EXIT_USAGE = 2


def _int_list(text: str) -> List[int]:
    """Parse ``"1,2,5"`` or a half-open range ``"0:20"``."""
    values: List[int] = []
    for part in text.split(","):
        part = part.strip()
        if not part:
            continue
        if ":" in part:
            start, stop = (int(v) for v in part.split(":"))
            values.extend(range(start, stop))
        else:
            values.append(int(part))
    return values


def _float_list(text: str) -> List[float]:
    return [float(part) for part in text.split(",") if part.strip()]


def _size(text: str) -> Tuple[int, int]:
    """``"128"`` or ``"128x96"`` (rows x columns)."""
    parts = text.lower().split("x")
    if len(parts) == 1:
        return int(parts[0]), int(parts[0])
    return int(parts[0]), int(parts[1])


def _out_dir(args: argparse.Namespace) -> Path:
    return Path(args.out or get_settings().default_out)


def _add_config_flags(parser: argparse.ArgumentParser) -> None:
    group = parser.add_argument_group("experiment configuration")
    group.add_argument("--config", help="Flat JSON experiment configuration")
    group.add_argument("--phantom", choices=PhantomGenerator.kinds())
    group.add_argument("--size", type=_size, help="Grid size N or HxW")
    group.add_argument("--amplitude", help="P5 image used as amplitude")
    group.add_argument("--shifts", help="Explicit shift vectors dy:dx,dy:dx,...")
    group.add_argument("--preset", choices=sorted(HARDWARE_PRESETS))
    group.add_argument("--n-shifts", type=int, choices=PLAN_SIZES)
    group.add_argument("--noise", choices=NOISE_MODELS)
    group.add_argument("--snr", type=float, help="Target SNR in dB")
    group.add_argument("--read-sigma", type=float, help="Read noise fraction of mean intensity")
    group.add_argument("--seeds", type=_int_list, help="Seeds, e.g. 0,1,2 or 0:20")
    group.add_argument("--averaging", choices=AVERAGING_MODES)
    group.add_argument("--engine", choices=PhasePropagator.engines())
    group.add_argument(
        "--ls",
        action=argparse.BooleanOptionalAction,
        default=None,
        help="Refine by least squares (--no-ls overrides a config file)",
    )
    group.add_argument("--lam", type=float, help="Least-squares Tikhonov weight")
    group.add_argument("--reliability-floor", type=float)
    group.add_argument("--boundary", choices=("circular", "zero-fill"))
    group.add_argument("--mask-threshold", type=float)


def config_from_args(args: argparse.Namespace) -> ExperimentConfig:
    """Config file (or defaults) overridden by every flag that was given."""
    base = ExperimentConfig.from_file(args.config) if args.config else ExperimentConfig()
    overrides: Dict[str, Any] = {"out_dir": str(_out_dir(args))}
    simple = {
        "phantom": "phantom",
        "amplitude": "amplitude_source",
        "preset": "shift_preset",
        "n_shifts": "n_shifts",
        "noise": "noise_model",
        "snr": "snr_db",
        "read_sigma": "read_sigma_fraction",
        "seeds": "seeds",
        "averaging": "averaging",
        "engine": "engine",
        "ls": "ls",
        "lam": "lam",
        "reliability_floor": "reliability_floor",
        "boundary": "boundary",
        "mask_threshold": "mask_threshold",
    }
    for flag, key in simple.items():
        value = getattr(args, flag, None)
        if value is not None:
            overrides[key] = value
    if args.size is not None:
        overrides["height"], overrides["width"] = args.size
    if args.shifts is not None:
        overrides["shifts"] = ShiftSet.parse(args.shifts).to_list()
    return base.replace(**overrides)


def _print_table(rows: Sequence[Sequence[Any]]) -> None:
    widths = [max(len(str(row[i])) for row in rows) for i in range(len(rows[0]))]
    for row in rows:
        print("  ".join(str(cell).rjust(width) for cell, width in zip(row, widths)))


def cmd_plan(args: argparse.Namespace) -> int:
    """Print a shift plan with its hop statistics."""
    if args.n is not None:
        if args.pairs:
            magnitudes: Tuple[int, ...] = optimal_pair(args.n)
        elif args.magnitudes:
            magnitudes = tuple(_int_list(args.magnitudes))
        else:
            print("plan --n needs --pairs or --shifts", file=sys.stderr)
            return EXIT_USAGE
        hops = hop_distances(LineGraph(args.n, magnitudes))
        print(f"nodes: {args.n}")
        print(f"shifts: {','.join(str(m) for m in magnitudes)}")
        print(f"max hop: {hops.max_hop}")
        print(f"hop lower bound: {hop_lower_bound(args.n)}")
        if hops.is_complete:
            print("connected: yes")
        else:
            missing = int((~hops.reachable).sum())
            logger.warning("Plan %s on %d nodes is disconnected", magnitudes, args.n)
            print(f"DISCONNECTED: {missing} of {args.n} nodes unreachable")
        return EXIT_OK

    height, width = args.size or (128, 128)
    if args.magnitudes:
        shifts = ShiftSet.from_magnitudes(_int_list(args.magnitudes))
        shifts.validate_for((height, width))
    elif args.preset:
        shifts = plan_named(args.preset, height, width)
    else:
        shifts = plan_2d(height, width, args.count)
    rows: List[Sequence[Any]] = [("axis", "dy", "dx", "magnitude")]
    rows.extend((s.axis, s.dy, s.dx, s.magnitude) for s in shifts)
    _print_table(rows)
    summary: Dict[str, Any] = {"shifts": shifts.to_list(), "n_meas": measurement_count(shifts)}
    for axis, n in (("h", width), ("v", height)):
        magnitudes = shifts.axis_magnitudes().get(axis, [])
        if not magnitudes:
            continue
        hops = hop_distances(LineGraph(n, tuple(magnitudes)))
        summary[f"{axis}_max_hop"] = hops.max_hop
        summary[f"{axis}_connected"] = hops.is_complete
        print(
            f"{axis}: max hop {hops.max_hop}, lower bound {hop_lower_bound(n)}, "
            f"{'connected' if hops.is_complete else 'DISCONNECTED'}"
        )
        if not hops.is_complete:
            logger.warning("Axis %s of the plan is disconnected", axis)
    print(f"measurements: {summary['n_meas']}")
    if args.out:
        write_json(_out_dir(args) / "plan.json", summary)
    return EXIT_OK


def cmd_simulate(args: argparse.Namespace) -> int:
    """Simulate the capture stack of the first seed."""
    config = config_from_args(args)
    seed = config.seeds[0]
    phantom = generate(config.phantom_spec(seed))
    stack = simulate_shifted(
        phantom.field, config.resolve_shifts(), config.noise_spec(seed), config.boundary
    )
    root = _out_dir(args)
    stack.save(root / "stack")
    write_field(root / "truth.srwf", phantom.truth)
    write_field(root / "field.srwf", phantom.field)
    write_json(root / "meta.json", {"config": config.to_dict(), "seed": seed, **stack.meta()})
    print(f"frames: {stack.n_meas}, achieved SNR: {stack.achieved_snr_db:.2f} dB")
    return EXIT_OK


def _reconstruct(args: argparse.Namespace) -> Tuple[MeasurementStack, Any, PropagationResult]:
    stack = MeasurementStack.load(args.stack)
    phasors = extract_phasors(stack, args.reliability_floor)
    result = PhasePropagator(args.engine, args.averaging).propagate(phasors)
    return stack, phasors, result


def _report_truth(args: argparse.Namespace, estimate: PhaseMap, label: str) -> None:
    if args.truth:
        report = phase_error(estimate, read_phase(args.truth))
        print(f"{label} error: {report.mean_abs_error:.6g} rad (std {report.std:.6g})")


def cmd_reconstruct(args: argparse.Namespace) -> int:
    """Extract phasors from a saved stack and propagate them."""
    stack, phasors, result = _reconstruct(args)
    root = _out_dir(args)
    phasors.save(root / "phasors")
    result.save(root)
    write_field(root / "amplitude.srwf", recover_amplitude(stack))
    print(f"max hop: {result.hops.max_hop}, unreached: {int(result.unreached.sum())}")
    _report_truth(args, result.phase, "propagated")
    return EXIT_OK


def cmd_refine(args: argparse.Namespace) -> int:
    """Reconstruct a saved stack and refine it by least squares."""
    _, phasors, result = _reconstruct(args)
    refined = refine_pipeline(result, phasors, lam=args.lam)
    root = _out_dir(args)
    write_field(root / "phase_ls.srwf", refined.unwrapped)
    write_field(root / "phase_ls_wrapped.srwf", refined.wrapped)
    if refined.dropped_shifts:
        print(f"dropped shifts: {','.join(str(k) for k in refined.dropped_shifts)}")
    _report_truth(args, result.phase, "propagated")
    _report_truth(args, refined.wrapped, "refined")
    return EXIT_OK


def _summarize(outcomes: Sequence[Any], prefix: Callable[[Any], str] = lambda _: "") -> bool:
    all_ok = True
    for outcome in outcomes:
        if outcome.ok:
            line = f"{prefix(outcome)}seed {outcome.seed}: error {outcome.report.mean_abs_error:.4f}"
            if outcome.refined is not None:
                line += f", ls {outcome.refined.mean_abs_error:.4f}"
            print(line)
        else:
            all_ok = False
            print(f"{prefix(outcome)}seed {outcome.seed}: {outcome.status}")
    return all_ok


def cmd_run(args: argparse.Namespace) -> int:
    """Run every seed of a configuration."""
    config = config_from_args(args)
    runner = ExperimentRunner(config, out_dir=_out_dir(args))
    outcomes = asyncio.run(runner.run())
    return EXIT_OK if _summarize(outcomes) else EXIT_FAILED


def cmd_sweep(args: argparse.Namespace) -> int:
    """Sweep SNR, measurement count or the second shift."""
    config = config_from_args(args)
    runner = ExperimentRunner(config, out_dir=_out_dir(args))
    if args.axis == "t-shift":
        t_values = _int_list(args.t_values) if args.t_values else list(range(1, args.n))
        rows = asyncio.run(runner.sweep_pairs(args.n, args.s, t_values, args.trials, args.sigma))
        table: List[Sequence[Any]] = [("t", "max_hop", "connected", "mean_error")]
        for row in rows:
            error = "-" if row.mean_error is None else f"{row.mean_error:.4f}"
            table.append((row.t, row.max_hop, "yes" if row.connected else "no", error))
        _print_table(table)
        return EXIT_OK
    if not args.values:
        print("sweep needs --values for this axis", file=sys.stderr)
        return EXIT_USAGE
    results = asyncio.run(runner.sweep(args.axis, _float_list(args.values)))
    labels = {id(outcome): value for value, outcome in results}
    ok = _summarize(
        [outcome for _, outcome in results],
        prefix=lambda o: f"{args.axis}={labels[id(o)]:g} ",
    )
    return EXIT_OK if ok else EXIT_FAILED


def cmd_refocus(args: argparse.Namespace) -> int:
    """Propagate a field over a z range and keep the sharpest plane."""
    field = read_field(args.field)
    params = PropagationParams(wavelength=args.wavelength, pitch=args.pitch)
    z_list = z_range(args.z_start, args.z_stop, args.z_step)
    result = refocus_sweep(field, params, z_list, padding=args.padding, criterion=args.criterion)
    root = _out_dir(args)
    write_rows(root / "sharpness.csv", result.rows(), ("z", "sharpness"))
    write_field(root / "best_field.srwf", result.best_field)
    write_field(root / "best_intensity.srwf", result.best_field.amplitude() ** 2)
    print(f"best z: {result.best_z:.6g} m")
    return EXIT_OK


def cmd_verify_theory(args: argparse.Namespace) -> int:
    """Run the executable shift-graph theory suites."""
    checks = run_all(quick=args.quick)
    for check in checks:
        print(check.summary())
        for failure in check.failures:
            print(f"  {failure}")
    if args.out:
        write_json(
            _out_dir(args) / "theory.json",
            {
                c.name: {"cases": c.cases, "failures": c.failures, "seconds": c.seconds}
                for c in checks
            },
        )
    return EXIT_OK if all(c.passed for c in checks) else EXIT_FAILED


def cmd_diffuser(args: argparse.Namespace) -> int:
    """Run the synthetic see-through-diffuser experiment."""
    config = config_from_args(args)
    seed = config.seeds[0]
    phantom = generate(config.phantom_spec(seed))
    params = PropagationParams(
        wavelength=args.wavelength, pitch=args.pitch, distance=args.distance
    )
    outcome = diffuser_experiment(
        phantom,
        params,
        shifts=config.resolve_shifts(),
        noise=config.noise_spec(seed),
        screen_seed=seed,
        engine=config.engine,
        mask_threshold=config.mask_threshold or 0.1,
    )
    root = _out_dir(args)
    write_field(root / "corrected.srwf", outcome.corrected)
    write_field(root / "screen.srwf", outcome.screen)
    write_json(
        root / "diffuser.json",
        {
            "config": config.to_dict(),
            "optics": params.to_dict(),
            "phase_error": outcome.report.mean_abs_error,
            "phase_error_std": outcome.report.std,
            "achieved_snr_db": outcome.report.achieved_snr_db,
        },
    )
    print(f"diffuser phase error: {outcome.report.mean_abs_error:.6g} rad")
    return EXIT_OK


def _add_reconstruction_flags(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--stack", required=True, help="Directory written by simulate")
    parser.add_argument("--truth", help="Ground-truth phase SRWF for error reporting")
    parser.add_argument("--engine", choices=PhasePropagator.engines(), default="wavefront")
    parser.add_argument("--averaging", choices=AVERAGING_MODES, default="mean")
    parser.add_argument("--reliability-floor", type=float, default=0.02)


def _add_optics_flags(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--wavelength", type=float, default=532e-9, help="Meters")
    parser.add_argument("--pitch", type=float, default=3.45e-6, help="Meters")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="shiftwave", description="Shifted self-reference interferometry toolkit"
    )
    parser.add_argument("--out", help="Output directory (default: SHIFTWAVE_OUT or runs)")
    parser.add_argument("--log-level", default="", help="Logging level (default: SHIFTWAVE_LOG_LEVEL)")
    commands = parser.add_subparsers(dest="command", required=True)

    plan = commands.add_parser("plan", help="Plan shifts and report hop statistics")
    plan.add_argument("--n", type=int, help="1D node count")
    plan.add_argument("--size", type=_size, help="2D grid size N or HxW")
    plan.add_argument("--pairs", action="store_true", help="Use the optimal pair for --n")
    plan.add_argument("--shifts", dest="magnitudes", help="Shift magnitudes, e.g. 2,3")
    plan.add_argument("--count", type=int, choices=PLAN_SIZES, default=2)
    plan.add_argument("--preset", choices=sorted(HARDWARE_PRESETS))
    plan.set_defaults(handler=cmd_plan)

    simulate = commands.add_parser("simulate", help="Simulate a capture stack")
    _add_config_flags(simulate)
    simulate.set_defaults(handler=cmd_simulate)

    reconstruct = commands.add_parser("reconstruct", help="Extract and propagate a stack")
    _add_reconstruction_flags(reconstruct)
    reconstruct.set_defaults(handler=cmd_reconstruct)

    refine = commands.add_parser("refine", help="Reconstruct and refine by least squares")
    _add_reconstruction_flags(refine)
    refine.add_argument("--lam", type=float, default=1e-3)
    refine.set_defaults(handler=cmd_refine)

    run = commands.add_parser("run", help="Run every seed of an experiment")
    _add_config_flags(run)
    run.set_defaults(handler=cmd_run)

    sweep = commands.add_parser("sweep", help="Sweep one experiment axis")
    _add_config_flags(sweep)
    sweep.add_argument("--axis", choices=SWEEP_AXES, required=True)
    sweep.add_argument("--values", help="Axis values, e.g. 13,22,31 or 8,16,32")
    sweep.add_argument("--n", type=int, default=512, help="Nodes for the t-shift axis")
    sweep.add_argument("--s", type=int, default=16, help="Fixed shift for the t-shift axis")
    sweep.add_argument("--t-values", help="Second shifts, e.g. 10:30")
    sweep.add_argument("--trials", type=int, default=50)
    sweep.add_argument("--sigma", type=float, default=0.1, help="Difference noise in radians")
    sweep.set_defaults(handler=cmd_sweep)

    refocus = commands.add_parser("refocus", help="Find the sharpest propagation distance")
    refocus.add_argument("--field", required=True, help="Complex field SRWF")
    _add_optics_flags(refocus)
    refocus.add_argument("--z-start", type=float, default=0.0)
    refocus.add_argument("--z-stop", type=float, default=0.1)
    refocus.add_argument("--z-step", type=float, default=0.001)
    refocus.add_argument("--padding", type=int, default=2)
    refocus.add_argument("--criterion", choices=SHARPNESS_CRITERIA, default="normalized_variance")
    refocus.set_defaults(handler=cmd_refocus)

    verify = commands.add_parser("verify-theory", help="Run the shift-graph theory suites")
    verify.add_argument("--quick", action="store_true", help="Reduced case counts")
    verify.set_defaults(handler=cmd_verify_theory)

    diffuser = commands.add_parser("diffuser", help="Synthetic see-through-diffuser run")
    _add_config_flags(diffuser)
    _add_optics_flags(diffuser)
    diffuser.add_argument("--distance", type=float, default=0.005, help="Meters")
    diffuser.set_defaults(handler=cmd_diffuser)
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    configure_logging(args.log_level)
    try:
        return args.handler(args)
    except (ShiftwaveError, ValueError, OSError) as e:
        logger.error("%s failed: %s", args.command, e)
        print(f"error: {type(e).__name__}: {e}", file=sys.stderr)
        return EXIT_FAILED
