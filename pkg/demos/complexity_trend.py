"""
Gamma-count growth of the solver with the number of clients.

Runs the bench harness at L = 50 over a K range and fits the log-log slope
of the mean gamma count (has-set-union cardinality evaluations).  Expect a
low-degree polynomial trend (slope around 3).  Wall time is printed for
orientation only; gamma is the portable metric.

Usage: python demos/complexity_trend.py [k_max] [reps]   (defaults 40, 10)
"""

import sys

from cdex import bench


def main():
    k_max = int(sys.argv[1]) if len(sys.argv) > 1 else 40
    reps = int(sys.argv[2]) if len(sys.argv) > 2 else 10
    records = list(bench.run(L=50, k_range=range(5, k_max + 1), reps=reps, seed=0))
    by_k = {}
    for r in records:
        by_k.setdefault(r.K, []).append(r)
    print("  K   mean_gamma   mean_ms")
    for k in sorted(by_k):
        rs = by_k[k]
        gamma = sum(r.gamma_count for r in rs) / len(rs)
        ms = sum(r.wall_ns for r in rs) / len(rs) / 1e6
        if k % 5 == 0:
            print("%3d  %11.0f  %8.2f" % (k, gamma, ms))
    slope = bench.loglog_slope(records)
    print("\nlog-log slope of mean gamma vs K: %.3f" % slope)
    print("(candidate search capped at subsets of %d blocks, the bench default)"
          % bench.DEFAULT_K_CAP)


if __name__ == "__main__":
    main()
