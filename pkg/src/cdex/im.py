"""
Iterative Merging (IM) solver.

Starting from the K-singleton partition and an initial alpha (the lower
bound), the solver repeatedly looks for a family of blocks whose merge is
beneficial (negative x_value), updates per-client rates so the merged group
can recover locally, and merges.  Whenever the current partition certifies
that alpha is too small (alpha > sum of v over the blocks), alpha is raised
by one and the search restarts from singletons.  A final rate update on the
terminal partition plus an excess reduction yields a minimum sum-rate
integer strategy.

Every decision is recorded in a SolveTrace whose replay reproduces the
output rate vector exactly.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from itertools import combinations

from .model import EvalContext, Instance, check_valid, union_size
from .sumrate import ceil_frac, lower_bound, v_value


class NoExcessBlockError(RuntimeError):
    """update_rates found no block able to absorb the delta_alpha reduction
    without dropping below its already-accumulated rate."""

    def __init__(self, msg, partial_state=None):
        super().__init__(msg)
        self.partial_state = partial_state


class InfeasibleResultError(RuntimeError):
    """The greedy multi-client final reduction produced a rate vector that
    failed cut verification; the result must not be trusted."""


@dataclass(frozen=True)
class TieBreakConfig:
    """Deterministic tie-break rules; recorded in the trace.

    excess_block_rule: which eligible block absorbs the delta_alpha reduction
      - "highest-min-index": eligible block with the highest minimum client id
      - "lowest-index": eligible block with the lowest minimum client id
    client_in_block_rule: which client of a block receives the rate increment
      - "lowest-index": smallest client id
      - "least-rate": smallest current rate, then smallest id (reproduces the
        worked reference traces)
      - "seeded-random": uniform choice from the context's seeded RNG
    """

    excess_block_rule: str = "highest-min-index"
    client_in_block_rule: str = "lowest-index"


DEFAULT_CONFIG = TieBreakConfig()
PAPER_TRACE_CONFIG = TieBreakConfig(client_in_block_rule="least-rate")


@dataclass(frozen=True)
class MergeCandidate:
    blocks: tuple        # >= 2 coalitions from the current partition
    x_value: int         # < 0: merging is beneficial


@dataclass
class SolveTrace:
    """Ordered event log; replay() rebuilds the rate vector from scratch."""

    config: TieBreakConfig
    k_cap: int | None
    events: list = field(default_factory=list)

    def add(self, kind: str, **data) -> None:
        self.events.append({"kind": kind, **data})

    def replay(self, num_clients: int) -> tuple:
        rates = [0] * num_clients
        for ev in self.events:
            if ev["kind"] == "rates_updated":
                for j, dr in ev["client_deltas"]:
                    rates[j - 1] += dr
            elif ev["kind"] == "final_reduction":
                for j, dr in ev["reductions"]:
                    rates[j - 1] -= dr
        return tuple(rates)

    def merges(self) -> list:
        return [ev for ev in self.events if ev["kind"] == "merged"]

    def lines(self):
        for ev in self.events:
            rest = " ".join("%s=%s" % (k, _fmt(v)) for k, v in ev.items() if k != "kind")
            yield "%s %s" % (ev["kind"], rest)


def _fmt(value):
    if isinstance(value, frozenset):
        return "{%s}" % ",".join(map(str, sorted(value)))
    if isinstance(value, (tuple, list)):
        return "[%s]" % ",".join(_fmt(v) for v in value)
    return str(value)


@dataclass
class SolveResult:
    alpha: int
    rates: tuple
    trace: SolveTrace
    gamma: int
    verified: bool   # True when the output passed an explicit cut check


def find_merge_cand(ctx: EvalContext, instance: Instance, W, alpha: int,
                    k_cap: int | None = None):
    """Smallest k in 2..|W|-1 admitting a k-subset of blocks with negative
    x_value; among those, the minimum x_value, ties to the lexicographically
    smallest block-index set (blocks ordered by minimum client id).
    Returns None when |W| <= 2 or no subset qualifies up to k_cap."""
    blocks = sorted(W, key=min)
    m = len(blocks)
    k_max = m - 1 if k_cap is None else min(m - 1, k_cap)
    for k in range(2, k_max + 1):
        best_x = None
        best_blocks = None
        for idx in combinations(range(m), k):
            group = [blocks[i] for i in idx]
            merged = frozenset().union(*group)
            x = v_value(ctx, instance, alpha, merged) - sum(
                v_value(ctx, instance, alpha, b) for b in group)
            if x < 0 and (best_x is None or x < best_x):
                best_x, best_blocks = x, tuple(group)
        if best_blocks is not None:
            return MergeCandidate(best_blocks, best_x)
    return None


def _pick_client(block, rates, cfg: TieBreakConfig, rng) -> int:
    if cfg.client_in_block_rule == "lowest-index":
        return min(block)
    if cfg.client_in_block_rule == "least-rate":
        return min(block, key=lambda j: (rates[j - 1], j))
    if cfg.client_in_block_rule == "seeded-random":
        return rng.choice(sorted(block))
    raise ValueError("unknown client_in_block_rule %r" % cfg.client_in_block_rule)


def _update_rates(ctx, instance, rates, U, cfg, rng, strict: bool):
    """Shared core of update_rates.  Returns (new_rates, event_dict)."""
    blocks = sorted(U, key=min)
    k = len(blocks)
    merged = frozenset().union(*blocks)
    h_merged = union_size(ctx, instance, merged)
    sizes = [union_size(ctx, instance, X) for X in blocks]
    alpha_u = ceil_frac(sum(h_merged - s for s in sizes), k - 1)
    targets = [alpha_u - h_merged + s for s in sizes]
    delta_alpha = sum(targets) - alpha_u
    block_rates = [sum(rates[j - 1] for j in X) for X in blocks]
    chosen = None
    skipped = False
    if delta_alpha > 0:
        eligible = [i for i in range(k) if targets[i] - delta_alpha >= block_rates[i]]
        if not eligible:
            if strict:
                raise NoExcessBlockError(
                    "no block can absorb delta_alpha=%d without a negative "
                    "increment" % delta_alpha,
                    partial_state={"blocks": blocks, "targets": targets,
                                   "block_rates": block_rates,
                                   "delta_alpha": delta_alpha})
            skipped = True
        else:
            if cfg.excess_block_rule == "highest-min-index":
                chosen = max(eligible, key=lambda i: min(blocks[i]))
            elif cfg.excess_block_rule == "lowest-index":
                chosen = min(eligible, key=lambda i: min(blocks[i]))
            else:
                raise ValueError("unknown excess_block_rule %r" % cfg.excess_block_rule)
            targets[chosen] -= delta_alpha
    new = list(rates)
    client_deltas = []
    for i, X in enumerate(blocks):
        dr = targets[i] - block_rates[i]
        if dr > 0:
            j = _pick_client(X, new, cfg, rng)
            new[j - 1] += dr
            client_deltas.append((j, dr))
    event = {
        "blocks": tuple(blocks), "alpha_u": alpha_u, "targets": tuple(targets),
        "delta_alpha": delta_alpha,
        "chosen_block": blocks[chosen] if chosen is not None else None,
        "reduction_skipped": skipped, "client_deltas": tuple(client_deltas),
    }
    return tuple(new), event


def update_rates(ctx: EvalContext, instance: Instance, rates, U,
                 cfg: TieBreakConfig = DEFAULT_CONFIG):
    """Rate update for merging the disjoint coalitions in U: each block is
    brought up to its target R = alpha_U - |H_U| + |H_X|, with delta_alpha
    subtracted from one chosen block; the increment goes to one client of the
    block.  Raises NoExcessBlockError when the reduction cannot be placed."""
    blocks = list(U)
    seen = set()
    for b in blocks:
        if seen & set(b):
            raise ValueError("update_rates blocks must be pairwise disjoint")
        seen |= set(b)
    rng = random.Random(ctx.rng_seed)
    new, _event = _update_rates(ctx, instance, tuple(rates), blocks, cfg, rng,
                                strict=True)
    return new


def solve(instance: Instance, alpha0: int = 0,
          cfg: TieBreakConfig = DEFAULT_CONFIG,
          k_cap: int | None = None,
          seed: int = 0) -> SolveResult:
    """Run IM to a minimum sum-rate integer strategy.

    k_cap limits the merge-candidate subset size and exists for benchmarking
    only: with a cap the returned alpha can undershoot the optimum and the
    rates are not guaranteed feasible (the exponential sweep that certifies
    "no candidate" is exactly what the cap skips)."""
    check_valid(instance)
    if alpha0 < 0:
        raise ValueError("alpha0 must be >= 0")
    ctx = EvalContext(rng_seed=seed)
    rng = random.Random(seed)
    trace = SolveTrace(config=cfg, k_cap=k_cap)
    K = instance.num_clients
    alpha = max(alpha0, lower_bound(ctx, instance))
    if alpha > alpha0:
        trace.add("alpha_raised", old=alpha0, new=alpha, reason="lower_bound",
                  partition=tuple(frozenset([j]) for j in range(1, K + 1)))

    while True:
        W = [frozenset([j]) for j in range(1, K + 1)]
        rates = tuple(0 for _ in range(K))
        restarted = False
        while True:
            total_v = sum(v_value(ctx, instance, alpha, X) for X in W)
            if alpha > total_v:
                trace.add("alpha_raised", old=alpha, new=alpha + 1,
                          reason="cond3", partition=tuple(sorted(W, key=min)))
                alpha += 1
                restarted = True
                break
            if len(W) <= 2:
                break
            cand = find_merge_cand(ctx, instance, W, alpha, k_cap)
            if cand is None:
                break
            rates, event = _update_rates(ctx, instance, rates, cand.blocks,
                                         cfg, rng, strict=False)
            trace.add("rates_updated", **event)
            merged = frozenset().union(*cand.blocks)
            W = [b for b in W if b not in cand.blocks] + [merged]
            trace.add("merged", blocks=cand.blocks, x_value=cand.x_value,
                      partition=tuple(sorted(W, key=min)))
        if not restarted:
            break

    rates, event = _update_rates(ctx, instance, rates, W, cfg, rng, strict=False)
    trace.add("rates_updated", **event)

    verified = False
    excess = sum(rates) - alpha
    if excess > 0:
        rates, reductions, needs_check = _reduce_excess(ctx, instance, rates, excess)
        trace.add("final_reduction", reductions=tuple(reductions),
                  delta_r=excess, multi_client=needs_check)
        if needs_check:
            verified = instance.num_clients <= 20 and _verify_cuts(ctx, instance, rates)
            if not verified and k_cap is None:
                # Without a candidate cap the solver promises a feasible
                # strategy; refuse to hand back anything unverified.  Capped
                # runs are benchmarking instruments and only report alpha and
                # the gamma count, so they carry on with verified=False.
                raise InfeasibleResultError(
                    "multi-client excess reduction failed cut verification; "
                    "refusing to return an unverified strategy")
    return SolveResult(alpha=alpha, rates=rates, trace=trace,
                       gamma=ctx.gamma_count, verified=verified)


def _reduce_excess(ctx, instance, rates, excess):
    """Remove `excess` transmissions.  Preferred: one client whose slack over
    its own cut bound covers the whole excess.  Fallback: greedy over clients,
    each capped by its slack; caller must verify the result."""
    L, K = instance.num_packets, instance.num_clients
    slack = {}
    for j in range(1, K + 1):
        others = [x for x in range(1, K + 1) if x != j]
        slack[j] = rates[j - 1] - (L - union_size(ctx, instance, others))
    single = [j for j in range(1, K + 1)
              if slack[j] >= excess and rates[j - 1] >= excess]
    new = list(rates)
    if single:
        j = min(single)
        new[j - 1] -= excess
        return tuple(new), [(j, excess)], False
    reductions = []
    remaining = excess
    for j in range(1, K + 1):
        take = min(remaining, max(min(slack[j], new[j - 1]), 0))
        if take > 0:
            new[j - 1] -= take
            reductions.append((j, take))
            remaining -= take
        if remaining == 0:
            break
    if remaining > 0:
        raise InfeasibleResultError(
            "excess reduction short by %d transmissions" % remaining)
    return tuple(new), reductions, True


def _verify_cuts(ctx, instance, rates) -> bool:
    # Local cut check (kept independent of the oracle module to avoid an
    # import cycle); only reachable on the multi-client fallback path.
    K, L = instance.num_clients, instance.num_packets
    if K > 20:
        return False
    masks = instance._masks
    for sub in range(1, (1 << K) - 1):
        r_x = 0
        m = 0
        for j in range(K):
            if sub >> j & 1:
                r_x += rates[j]
            else:
                m |= masks[j]
        ctx.charge()
        if r_x < L - m.bit_count():
            return False
    return True
