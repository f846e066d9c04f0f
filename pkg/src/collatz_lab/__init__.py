"""Exact-arithmetic laboratory for the Collatz map family.

Index arithmetic (`arith`), accelerated step maps and tracing (`sequences`),
the inverse affine map with candidate-tree enumeration (`reverse_tree`),
range checkers (`verify`, `oeis`), serialization (`emit`) and a CLI (`cli`).
Hot loops run on a compiled extension when available; `kernels.BACKEND`
names the active implementation.
"""

from collatz_lab.arith import (
    IndexTuple,
    OddShiftRep,
    ThreeTuple,
    even_from_index,
    index_pair,
    interleave_p,
    odd_from_index,
    odd_shift_split,
    ruler,
    shifted_ruler_q,
    three_tuple,
)
from collatz_lab.errors import (
    BFileParseError,
    ConfigurationError,
    DomainError,
    InnerSplitUndefined,
)
from collatz_lab.kernels import ACCELERATED, BACKEND
from collatz_lab.reverse_tree import (
    AffineStep,
    CycleScanReport,
    MultiplicityResult,
    Orphan,
    PathComposition,
    WZNode,
    WZTree,
    build_tree,
    compose_path,
    cycle_scan,
    multiplicity,
    reverse_affine_step,
    steiner_search,
    w_candidate,
    w_forward,
    w_from_z,
    z_from_w,
)
from collatz_lab.sequences import (
    DEFAULT_MAGNITUDE_CEILING,
    DEFAULT_TARGETS,
    GParams,
    Outcome,
    ParityFlip,
    StatsRow,
    StatsTable,
    Trace,
    apt_step,
    collatz_step,
    emapt_step_pq,
    emapt_step_ruler,
    g_step,
    gapt_step,
    mapt_even_step,
    mapt_odd_step,
    omapt_step,
    parity_flip,
    stopping_stats,
    terras_step,
    trace,
    u_to_v,
    x_step,
)
from collatz_lab.verify import (
    TheoremReport,
    Violation,
    check_conjectures,
    check_covering,
    check_dual_forms,
    check_linear_and_fixed_point,
    check_p3n,
    check_parity_runs,
    check_u_residues,
    check_u_residues_odd_starts,
    check_x_residues,
    run_check,
)

__version__ = "0.1.0"

__all__ = [
    "ACCELERATED",
    "AffineStep",
    "BACKEND",
    "BFileParseError",
    "ConfigurationError",
    "CycleScanReport",
    "DEFAULT_MAGNITUDE_CEILING",
    "DEFAULT_TARGETS",
    "DomainError",
    "GParams",
    "IndexTuple",
    "InnerSplitUndefined",
    "MultiplicityResult",
    "OddShiftRep",
    "Orphan",
    "Outcome",
    "ParityFlip",
    "PathComposition",
    "StatsRow",
    "StatsTable",
    "TheoremReport",
    "ThreeTuple",
    "Trace",
    "Violation",
    "WZNode",
    "WZTree",
    "apt_step",
    "build_tree",
    "check_conjectures",
    "check_covering",
    "check_dual_forms",
    "check_linear_and_fixed_point",
    "check_p3n",
    "check_parity_runs",
    "check_u_residues",
    "check_u_residues_odd_starts",
    "check_x_residues",
    "collatz_step",
    "compose_path",
    "cycle_scan",
    "emapt_step_pq",
    "emapt_step_ruler",
    "even_from_index",
    "g_step",
    "gapt_step",
    "index_pair",
    "interleave_p",
    "mapt_even_step",
    "mapt_odd_step",
    "multiplicity",
    "odd_from_index",
    "odd_shift_split",
    "omapt_step",
    "parity_flip",
    "reverse_affine_step",
    "ruler",
    "run_check",
    "shifted_ruler_q",
    "steiner_search",
    "stopping_stats",
    "terras_step",
    "three_tuple",
    "trace",
    "u_to_v",
    "w_candidate",
    "w_forward",
    "w_from_z",
    "x_step",
    "z_from_w",
]
