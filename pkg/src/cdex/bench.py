"""
Complexity benchmark: gamma-count growth of the IM solver with client count.

For each K in a range, generate `reps` random instances at fixed L and
density, solve each, and record the gamma count (has-set-union cardinality
evaluations) plus wall time.  The headline statistic is the least-squares
slope of log(mean gamma) against log(K); wall time is informative only.

Benchmark solves cap the merge-candidate subset size (default 3).  Without a
cap the candidate sweep is exponential in the partition size, which is the
correctness price the solver pays, not the per-iteration behaviour the trend
measures; the cap is recorded here and in the solver trace.
"""

from __future__ import annotations

import csv
import time
from dataclasses import dataclass

import numpy as np

from . import im, model

CSV_COLUMNS = ("K", "L", "rep", "seed", "alpha_star", "gamma_count", "wall_ns")
DEFAULT_K_CAP = 3


@dataclass
class BenchRecord:
    K: int
    L: int
    rep: int
    seed: int
    alpha_star: int
    gamma_count: int
    wall_ns: int


def instance_seed(base_seed: int, K: int, rep: int) -> int:
    # Distinct deterministic stream per (K, rep) cell.
    return base_seed + 10007 * K + rep


def run(L: int, k_range, reps: int, density: float = 0.5, seed: int = 0,
        k_cap: int | None = DEFAULT_K_CAP):
    """Yield one BenchRecord per (K, rep) in deterministic order."""
    for K in k_range:
        for rep in range(reps):
            s = instance_seed(seed, K, rep)
            inst = model.random_instance(K, L, density, s)
            t0 = time.perf_counter_ns()
            result = im.solve(inst, alpha0=0, k_cap=k_cap, seed=s)
            wall = time.perf_counter_ns() - t0
            yield BenchRecord(K, L, rep, s, result.alpha, result.gamma, wall)


def write_csv(records, path: str) -> list:
    rows = list(records)
    with open(path, "w", newline="") as fh:
        writer = csv.writer(fh)
        writer.writerow(CSV_COLUMNS)
        for r in rows:
            writer.writerow([r.K, r.L, r.rep, r.seed, r.alpha_star,
                             r.gamma_count, r.wall_ns])
    return rows


def loglog_slope(records) -> float:
    """Least-squares slope of log(mean gamma_count) vs log(K)."""
    by_k = {}
    for r in records:
        by_k.setdefault(r.K, []).append(r.gamma_count)
    ks = sorted(by_k)
    if len(ks) < 2:
        raise ValueError("need at least two distinct K values for a slope")
    means = [float(np.mean(by_k[k])) for k in ks]
    slope, _intercept = np.polyfit(np.log(ks), np.log(means), 1)
    return float(slope)
