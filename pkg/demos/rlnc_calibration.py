"""
Calibration run for the random-coding success threshold.

The acceptance check asserts >= 99/100 successful trials for a cut-feasible
strategy at q = 65537.  That threshold is calibrated, not assumed: this
script runs 10^4 trials and prints the observed failure rate, which should
be far below 1% (each decoding failure needs a random matrix over F_q to
drop rank, an O(poly/q) event).  It also shows the deterministic failure of
a cut-violating vector.
"""

import time

from cdex import Instance, simulate

REF1 = Instance(7, ({1, 3, 4, 6, 7}, {1, 2, 3, 5}, {1, 5, 6}, {3, 5, 6}))
TRIALS = 10_000


def main():
    t0 = time.time()
    report = simulate(REF1, (3, 2, 0, 0), q=65537, trials=TRIALS, seed=0)
    dt = time.time() - t0
    failures = report.trials - report.successes
    print("feasible strategy (3,2,0,0): %d/%d successes (%d failures, %.4f%%) "
          "in %.1fs" % (report.successes, report.trials, failures,
                        100.0 * failures / report.trials, dt))
    print("=> the >=99/100 acceptance threshold has %s margin"
          % ("comfortable" if failures < report.trials / 1000 else "NO"))

    report = simulate(REF1, (1, 2, 1, 1), q=65537, trials=200, seed=0)
    trial, client, rank = report.worst()
    print("cut-violating strategy (1,2,1,1): %d/%d successes; "
          "worst client %d stuck at rank %d (< L=7) — deterministic, the "
          "violated cut bounds the reachable dimension"
          % (report.successes, report.trials, client, rank))


if __name__ == "__main__":
    main()
