"""
Independent ground truth for the solvers.

Strategy-level truth is the cut condition: a rate vector achieves universal
recovery iff for every nonempty proper client subset X, the transmissions
from inside X cover what the rest of the clients miss, r_X >= L - |H_{C\\X}|.
Sum-rate truth is exhaustive partition enumeration (shared with `sumrate`),
deliberately not the IM algorithm, so the two disagree if either is wrong.

Also here: the Queyranne closure step used in the optimality argument, and
the partition-minimality property (a partition produced by IM should have
the minimum total v among partitions with the same block count).
"""

from __future__ import annotations

from dataclasses import dataclass

from ._partitions import rgs_partitions
from .model import EvalContext, Instance, union_size
from .sumrate import local_recovery

CUT_CHECK_MAX_K = 20
ENUMERATION_MAX_K = 10


class OracleLimitError(ValueError):
    """Instance too large for an exhaustive oracle check."""


def partitions(ground, min_blocks: int, max_blocks: int):
    """All partitions of the ground set with a block count in range, each
    exactly once, in restricted-growth lexicographic order."""
    return rgs_partitions(sorted(ground), min_blocks, max_blocks)


@dataclass
class FeasibilityReport:
    feasible: bool
    violated: tuple | None = None  # (coalition, required, actual)


def is_feasible(ctx: EvalContext, instance: Instance, rates,
                max_k: int = CUT_CHECK_MAX_K) -> FeasibilityReport:
    """Cut check: r_X >= L - |H_{C\\X}| for every nonempty proper X."""
    K, L = instance.num_clients, instance.num_packets
    if K > max_k:
        raise OracleLimitError(
            "cut check is 2^K; K=%d exceeds %d — use the rlnc verifier for "
            "an empirical check instead" % (K, max_k))
    if len(rates) != K:
        raise ValueError("rate vector length %d != K=%d" % (len(rates), K))
    masks = instance._masks
    for sub in range(1, (1 << K) - 1):
        r_x = 0
        m = 0
        members = []
        for j in range(K):
            if sub >> j & 1:
                r_x += rates[j]
                members.append(j + 1)
            else:
                m |= masks[j]
        ctx.charge()
        required = L - m.bit_count()
        if r_x < required:
            return FeasibilityReport(False, (frozenset(members), required, r_x))
    return FeasibilityReport(True)


def is_feasible_dual(ctx: EvalContext, instance: Instance, rates,
                     max_k: int = CUT_CHECK_MAX_K) -> FeasibilityReport:
    """Equivalent form for vectors summing to alpha: r_X <= alpha - (L-|H_X|)
    for every nonempty proper X.  Cross-checked against is_feasible."""
    K, L = instance.num_clients, instance.num_packets
    if K > max_k:
        raise OracleLimitError("dual cut check limited to K <= %d" % max_k)
    alpha = sum(rates)
    masks = instance._masks
    for sub in range(1, (1 << K) - 1):
        r_x = 0
        m = 0
        members = []
        for j in range(K):
            if sub >> j & 1:
                r_x += rates[j]
                members.append(j + 1)
                m |= masks[j]
        ctx.charge()
        allowed = alpha - (L - m.bit_count())
        if r_x > allowed:
            return FeasibilityReport(False, (frozenset(members), allowed, r_x))
    return FeasibilityReport(True)


def verify_optimal(ctx: EvalContext, instance: Instance, rates) -> dict:
    """Feasible and sum equal to the brute-force alpha*."""
    if instance.num_clients > ENUMERATION_MAX_K:
        raise OracleLimitError(
            "partition enumeration limited to K <= %d" % ENUMERATION_MAX_K)
    alpha_star = local_recovery(ctx, instance, sorted(instance.clients)).alpha_star
    report = is_feasible(ctx, instance, rates)
    return {
        "optimal": report.feasible and sum(rates) == alpha_star,
        "alpha_star": alpha_star,
        "feasible": report.feasible,
        "violated": report.violated,
    }


def queyranne_closure(ctx: EvalContext, instance: Instance, M0,
                      tie_break: str = "lowest-id"):
    """Grow M from M0 by repeatedly adding the client u minimizing
    |H_M| - |H_M cap H_u| (the alpha-independent merge cost), until M = C.
    Returns the addition sequence as (client, cost) pairs."""
    M = set(M0)
    if not M or M >= set(instance.clients):
        raise ValueError("M0 must be a nonempty proper subset of the clients")
    order = []
    while M != set(instance.clients):
        costs = {}
        h_m = union_size(ctx, instance, sorted(M))
        for u in sorted(set(instance.clients) - M):
            h_u = union_size(ctx, instance, [u])
            h_mu = union_size(ctx, instance, sorted(M | {u}))
            # |H_M cap H_u| = |H_M| + |H_u| - |H_M union H_u|
            costs[u] = h_m - (h_m + h_u - h_mu)
        low = min(costs.values())
        tied = sorted(u for u, c in costs.items() if c == low)
        if tie_break == "lowest-id":
            u = tied[0]
        elif tie_break == "highest-id":
            u = tied[-1]
        else:
            raise ValueError("unknown tie_break %r" % tie_break)
        order.append((u, low))
        M.add(u)
    return order


def partition_minimality_check(ctx: EvalContext, instance: Instance, W,
                               alpha: int | None = None) -> dict:
    """Is sum_X v(X) minimal among all partitions of C with |W| blocks?
    Since every such partition shares the |W|*(alpha-L) term, this reduces to
    minimality of sum_X |H_X| and is independent of alpha."""
    if instance.num_clients > ENUMERATION_MAX_K:
        raise OracleLimitError(
            "partition enumeration limited to K <= %d" % ENUMERATION_MAX_K)
    ground = sorted(instance.clients)
    if frozenset().union(*W) != frozenset(ground):
        raise ValueError("partition must cover the full client set")
    own = sum(union_size(ctx, instance, X) for X in W)
    k = len(W)
    for other in rgs_partitions(ground, k, k):
        total = sum(union_size(ctx, instance, X) for X in other)
        if total < own:
            return {"minimal": False, "witness": other}
    return {"minimal": True, "witness": None}
