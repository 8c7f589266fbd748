"""
Random linear network coding verifier over a prime field.

Operational check that a rate vector achieves universal recovery: client j's
initial knowledge is the span of the unit rows {e_i : i in H_j}; each client
broadcasts r_j rows, each a uniformly random combination of its INITIAL
basis (non-interactive coding — no re-encoding of received rows); every
client appends everything it hears; success means every client's accumulated
row space has full rank L.

Cut-feasible strategies succeed with probability -> 1 as q grows; a violated
cut makes some client fail deterministically, regardless of the coefficients.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

DEFAULT_Q = 65537  # prime; products of two residues fit comfortably in int64


def _check_prime(q: int) -> None:
    if q < 2 or any(q % d == 0 for d in range(2, int(q ** 0.5) + 1)):
        raise ValueError("q=%d is not prime" % q)


def rank(rows, q: int = DEFAULT_Q) -> int:
    """Rank over F_q of a list of length-L coefficient rows (0 if empty)."""
    _check_prime(q)
    if len(rows) == 0:
        return 0
    a = np.array(rows, dtype=np.int64) % q
    n_rows, n_cols = a.shape
    r = 0
    for col in range(n_cols):
        pivots = np.nonzero(a[r:, col])[0]
        if pivots.size == 0:
            continue
        p = r + pivots[0]
        a[[r, p]] = a[[p, r]]
        inv = pow(int(a[r, col]), q - 2, q)
        a[r] = a[r] * inv % q
        below = a[r + 1:, col].copy()
        a[r + 1:] = (a[r + 1:] - np.outer(below, a[r])) % q
        r += 1
        if r == n_rows:
            break
    return r


@dataclass
class SimReport:
    trials: int
    successes: int
    ranks: np.ndarray  # trials x K matrix of final ranks

    def worst(self):
        """(trial, client, rank) of the lowest final rank seen."""
        t, j = np.unravel_index(int(np.argmin(self.ranks)), self.ranks.shape)
        return int(t), int(j) + 1, int(self.ranks[t, j])


def _client_rows(instance, j: int, r_j: int, q: int, seed: int, trial: int):
    """r_j coded rows for client j, deterministic in (seed, trial, j).  Each
    trial/client pair owns an RNG stream, so growing r_j extends the row list
    by a prefix-preserving draw (monotonicity under the same seed)."""
    own = sorted(instance.has_sets[j - 1])
    rng = np.random.default_rng([seed, trial, j])
    coeffs = rng.integers(0, q, size=(r_j, len(own)), dtype=np.int64)
    rows = np.zeros((r_j, instance.num_packets), dtype=np.int64)
    rows[:, [p - 1 for p in own]] = coeffs
    return rows


def simulate(instance, rates, q: int = DEFAULT_Q, trials: int = 100,
             seed: int = 0) -> SimReport:
    """Run `trials` independent coding rounds and count full-rank successes."""
    _check_prime(q)
    K, L = instance.num_clients, instance.num_packets
    if len(rates) != K:
        raise ValueError("rate vector length %d != K=%d" % (len(rates), K))
    if trials < 1:
        raise ValueError("trials must be >= 1")
    eye = np.eye(L, dtype=np.int64)
    initial = [eye[[p - 1 for p in sorted(instance.has_sets[j - 1])]]
               for j in range(1, K + 1)]
    ranks = np.zeros((trials, K), dtype=np.int64)
    successes = 0
    for t in range(trials):
        broadcast = [_client_rows(instance, j, rates[j - 1], q, seed, t)
                     for j in range(1, K + 1)]
        ok = True
        for j in range(1, K + 1):
            heard = [initial[j - 1]] + [broadcast[i] for i in range(K) if i != j - 1]
            r = rank(np.vstack(heard), q)
            ranks[t, j - 1] = r
            ok = ok and r == L
        successes += ok
    return SimReport(trials, successes, ranks)
