# shiftwave/shiftgraph/__init__.py

"""
Shift-graph theory: connectivity, hop distances, bounds, planning and their
executable checks.
"""

from shiftwave.shiftgraph.graph import (
    connected_batch,
    hop_distances,
    is_connected,
    line_adjacency,
    pixel_graph,
    pixel_hop_distances,
)
from shiftwave.shiftgraph.models import LineGraph, PairSweepRow, TheoryCheck
from shiftwave.shiftgraph.planner import (
    HARDWARE_PRESETS,
    PLAN_SIZES,
    measurement_count,
    pair_sweep,
    plan_2d,
    plan_magnitudes,
    plan_named,
)
from shiftwave.shiftgraph.studies import (
    final_hop_error,
    hop_error_curve,
    line_mean_error,
    line_shifts,
    line_trial,
    referenced_errors,
)
from shiftwave.shiftgraph.theory import (
    coprime_guarantee,
    hop_lower_bound,
    optimal_pair,
    residue_coverage,
    sliding_window_chain,
    window_walk,
)
from shiftwave.shiftgraph.verification import (
    run_all,
    verify_connectivity,
    verify_hop_lower_bound,
    verify_optimal_pair,
    verify_residue_coverage,
    verify_sliding_window,
)

__all__ = [
    "HARDWARE_PRESETS",
    "LineGraph",
    "PLAN_SIZES",
    "PairSweepRow",
    "TheoryCheck",
    "connected_batch",
    "coprime_guarantee",
    "final_hop_error",
    "hop_distances",
    "hop_error_curve",
    "hop_lower_bound",
    "is_connected",
    "line_adjacency",
    "line_mean_error",
    "line_shifts",
    "line_trial",
    "measurement_count",
    "optimal_pair",
    "pair_sweep",
    "pixel_graph",
    "pixel_hop_distances",
    "plan_2d",
    "plan_magnitudes",
    "plan_named",
    "referenced_errors",
    "residue_coverage",
    "run_all",
    "sliding_window_chain",
    "verify_connectivity",
    "verify_hop_lower_bound",
    "verify_optimal_pair",
    "verify_residue_coverage",
    "verify_sliding_window",
    "window_walk",
]
