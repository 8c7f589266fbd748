"""
cdex: minimum sum-rate solvers and verifiers for cooperative data exchange
without packet splitting.

Modules:
  model   — instances, has-sets, gamma-counted set primitives, generation
  sumrate — closed-form sum-rate quantities (exhaustive, exact rationals)
  im      — the iterative-merging solver with a full decision trace
  dv      — divide-and-conquer fractional comparator
  oracle  — brute-force ground truth (cuts, optimality, closure, minimality)
  rlnc    — random linear coding verifier over a prime field
  bench   — gamma-count complexity benchmark
  cli     — command-line entry points
"""

from .model import EvalContext, Instance, random_instance, union_size, validate
from .sumrate import local_recovery, lower_bound, prop1_allocate, v_value, x_value
from .im import (DEFAULT_CONFIG, PAPER_TRACE_CONFIG, SolveResult, TieBreakConfig,
                 find_merge_cand, solve, update_rates)
from .dv import DvResult, dv_solve, mac
from .oracle import (FeasibilityReport, is_feasible, partition_minimality_check,
                     partitions, queyranne_closure, verify_optimal)
from .rlnc import SimReport, rank, simulate

__version__ = "0.1.0"

__all__ = [
    "EvalContext", "Instance", "random_instance", "union_size", "validate",
    "local_recovery", "lower_bound", "prop1_allocate", "v_value", "x_value",
    "DEFAULT_CONFIG", "PAPER_TRACE_CONFIG", "SolveResult", "TieBreakConfig",
    "find_merge_cand", "solve", "update_rates",
    "DvResult", "dv_solve", "mac",
    "FeasibilityReport", "is_feasible", "partition_minimality_check",
    "partitions", "queyranne_closure", "verify_optimal",
    "SimReport", "rank", "simulate",
]
