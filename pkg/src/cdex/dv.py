"""
Divide-and-conquer (DV) comparator with exact rational rates.

DV solves the packet-splitting relaxation: a MAC call on a set S returns the
exact fractional optimum alpha_frac and a maximizing partition; the solver
recurses into every non-singleton block with the budget R_X = alpha_frac -
|H_S| + |H_X|, absorbing any budget excess delta_r = R_S - alpha_frac into
one block.  Leaf budgets become client rates.  The rates are exact fractions
end to end; whether they happen to be integers is a derived flag — DV is the
comparator that shows rounding cannot repair a fractional optimum for the
no-packet-splitting problem.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from ._partitions import rgs_partitions
from .model import EvalContext, Instance, check_valid, union_size


class DvInvariantError(RuntimeError):
    """A recursion budget fell below the block's fractional optimum, which
    contradicts the theory DV relies on; abort loudly."""


def mac(ctx: EvalContext, instance: Instance, S):
    """Exact maximum of sum_X (|H_S|-|H_X|)/(|W|-1) over partitions W of S
    with 2 <= |W| <= |S|, plus a maximizer (ties: last in RGS order)."""
    S = sorted(S)
    if len(S) < 2:
        raise ValueError("mac needs |S| >= 2")
    hs = union_size(ctx, instance, S)
    best = None
    argmax = None
    for W in rgs_partitions(S, 2, len(S)):
        sizes = [union_size(ctx, instance, X) for X in W]
        val = Fraction(sum(hs - s for s in sizes), len(W) - 1)
        if best is None or val >= best:
            best, argmax = val, W
    return best, argmax


@dataclass
class DvCall:
    members: frozenset
    budget: Fraction
    alpha_frac: Fraction
    argmax: tuple
    delta_r: Fraction
    absorbed_by: frozenset | None
    children: list = field(default_factory=list)


@dataclass
class DvResult:
    rates: tuple          # K exact Fractions
    alpha_frac: Fraction  # root optimum
    integral: bool
    call_tree: DvCall
    gamma: int


def _pick_excess_block(blocks, excess_rule):
    ordered = sorted(blocks, key=min)
    if excess_rule == "lowest-block":
        return ordered[0]
    if excess_rule == "prefer-singletons":
        singles = [b for b in ordered if len(b) == 1]
        return singles[0] if singles else ordered[0]
    raise ValueError("unknown excess_rule %r" % excess_rule)


def dv_solve(instance: Instance, excess_rule: str = "lowest-block") -> DvResult:
    """Recursive DV descent from the full client set.

    excess_rule picks the block absorbing delta_r: "lowest-block" (default,
    lowest minimum client id) or "prefer-singletons" (singleton blocks first,
    then lowest id; reproduces the worked reference trace)."""
    check_valid(instance)
    ctx = EvalContext()
    rates = [Fraction(0)] * instance.num_clients

    def descend(S, budget: Fraction) -> DvCall:
        alpha_frac, W = mac(ctx, instance, S)
        delta_r = budget - alpha_frac
        if delta_r < 0:
            raise DvInvariantError(
                "budget %s below fractional optimum %s on %s"
                % (budget, alpha_frac, sorted(S)))
        absorbed = _pick_excess_block(W, excess_rule) if delta_r > 0 else None
        hs = union_size(ctx, instance, sorted(S))
        call = DvCall(frozenset(S), budget, alpha_frac, W, delta_r, absorbed)
        for X in W:
            r_x = alpha_frac - hs + union_size(ctx, instance, X)
            if X == absorbed:
                r_x += delta_r
            if len(X) == 1:
                (j,) = X
                rates[j - 1] = r_x
            else:
                call.children.append(descend(X, r_x))
        return call

    root_alpha, _ = mac(ctx, instance, sorted(instance.clients))
    tree = descend(sorted(instance.clients), root_alpha)
    integral = all(r.denominator == 1 for r in rates)
    return DvResult(tuple(rates), tree.alpha_frac, integral, tree, ctx.gamma_count)
