"""
Closed-form sum-rate quantities.

For a coalition X under candidate sum-rate alpha, v_alpha(X) = alpha - L +
|H_X| is the transmission budget X may keep for itself.  The minimum integer
sum-rate for local recovery in a set S is

    alpha*_S = max over partitions W of S, 2 <= |W| <= |S|, of
               ceil( sum_X (|H_S| - |H_X|) / (|W| - 1) )

and dropping the ceiling gives the fractional (packet-splitting) optimum
alpha_frac.  local_recovery() evaluates both by exhaustive partition
enumeration with exact rationals, and also returns the partition minimizing
sum_X v(X) at alpha*_S, from which a rate allocation follows.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations

from ._partitions import rgs_partitions
from .model import EvalContext, Instance, union_size


class AllocationError(ValueError):
    """Raised when a requested excess block cannot absorb the reduction."""


def ceil_frac(num: int, den: int) -> int:
    return -(-num // den)


def v_value(ctx: EvalContext, instance: Instance, alpha: int, coalition) -> int:
    """v_alpha(X) = alpha - L + |H_X| (one union_size call)."""
    return alpha - instance.num_packets + union_size(ctx, instance, coalition)


def x_value(ctx: EvalContext, instance: Instance, alpha: int, blocks) -> int:
    """X_alpha(Y) = v(union of Y) - sum of v over the blocks of Y; negative
    exactly when merging the blocks is beneficial."""
    blocks = list(blocks)
    if len(blocks) < 2:
        raise ValueError("x_value needs at least 2 blocks")
    seen = set()
    for b in blocks:
        if seen & set(b):
            raise ValueError("x_value blocks must be pairwise disjoint")
        seen |= set(b)
    merged = frozenset(seen)
    return v_value(ctx, instance, alpha, merged) - sum(
        v_value(ctx, instance, alpha, b) for b in blocks)


@dataclass
class LocalRecoveryResult:
    alpha_star: int
    alpha_frac: Fraction
    argmax_partitions: list
    minimizer_partition: tuple
    delta_alpha: int


def local_recovery(ctx: EvalContext, instance: Instance, S) -> LocalRecoveryResult:
    """Exhaustive evaluation of the local-recovery sum-rate in S.

    minimizer_partition minimizes sum_X v_{alpha*}(X); among ties the last
    partition in RGS order wins, i.e. the finest one (this reproduces the
    all-singletons minimizer on the worked reference instances)."""
    S = sorted(S)
    if len(S) < 2:
        raise ValueError("local recovery needs |S| >= 2")
    hs = union_size(ctx, instance, S)
    best = None
    argmax = []
    rows = []
    for W in rgs_partitions(S, 2, len(S)):
        sizes = [union_size(ctx, instance, X) for X in W]
        val = Fraction(sum(hs - s for s in sizes), len(W) - 1)
        rows.append((W, sum(sizes)))
        if best is None or val > best:
            best, argmax = val, [W]
        elif val == best:
            argmax.append(W)
    alpha_star = ceil_frac(best.numerator, best.denominator)
    min_val = None
    minimizer = None
    for W, size_sum in rows:
        total = len(W) * (alpha_star - hs) + size_sum
        if min_val is None or total <= min_val:
            min_val, minimizer = total, W
    return LocalRecoveryResult(alpha_star, best, argmax, minimizer, min_val - alpha_star)


def prop1_allocate(ctx: EvalContext, instance: Instance, S,
                   result: LocalRecoveryResult, excess_block_choice) -> dict:
    """Rate per block of the minimizer partition: r_X = alpha* - |H_S| + |H_X|,
    with delta_alpha subtracted from the chosen block X'."""
    X_prime = frozenset(excess_block_choice)
    if X_prime not in result.minimizer_partition:
        raise AllocationError("excess block is not in the minimizer partition")
    hs = union_size(ctx, instance, sorted(S))
    alloc = {}
    for X in result.minimizer_partition:
        r = result.alpha_star - hs + union_size(ctx, instance, X)
        if X == X_prime:
            r -= result.delta_alpha
            if r < 0:
                raise AllocationError(
                    "block %s cannot absorb delta_alpha=%d; pick another block"
                    % (sorted(X_prime), result.delta_alpha))
        alloc[X] = r
    return alloc


def lower_bound(ctx: EvalContext, instance: Instance,
                exhaustive_two_partitions: bool = False) -> int:
    """Initial alpha: max of the K-partition bound ceil(sum_j (L-|H_j|)/(K-1))
    and the best singleton-complement 2-partition bound 2L-|H_j|-|H_{C\\{j}}|.
    With exhaustive_two_partitions, all 2-partitions are checked (K <= 20)."""
    L, K = instance.num_packets, instance.num_clients
    clients = range(1, K + 1)
    t1 = ceil_frac(sum(L - union_size(ctx, instance, [j]) for j in clients), K - 1)
    t2 = max(2 * L - union_size(ctx, instance, [j])
             - union_size(ctx, instance, [x for x in clients if x != j])
             for j in clients)
    bound = max(t1, t2)
    if exhaustive_two_partitions:
        if K > 20:
            raise ValueError("exhaustive 2-partition bound limited to K <= 20")
        rest = [x for x in clients if x != 1]
        # Each 2-partition is visited once via the block containing client 1.
        for r in range(0, K - 1):
            for extra in combinations(rest, r):
                left = (1,) + extra
                right = [x for x in rest if x not in extra]
                cand = 2 * L - union_size(ctx, instance, left) \
                    - union_size(ctx, instance, right)
                bound = max(bound, cand)
    return bound
