"""
Problem representation for cooperative data exchange (CDE).

An instance is a packet count L and one has-set per client: the subset of
packets 1..L that client j initially holds.  Clients collectively know the
whole packet set.  Coalitions are frozensets of 1-based client ids; partitions
are tuples of disjoint coalitions covering a ground set.

Every has-set-union cardinality evaluation in the solver modules goes through
union_size(), which charges one unit to the EvalContext gamma counter.  That
counter is the complexity metric reported by the bench harness.
"""

from __future__ import annotations

import json
import random
from dataclasses import dataclass, field

Coalition = frozenset  # frozenset of 1-based client ids
Partition = tuple      # tuple of disjoint Coalitions covering a ground set


class InstanceError(ValueError):
    """Raised when an instance or coalition violates its invariants."""


@dataclass(frozen=True)
class Instance:
    """A CDE problem: L packets and K client has-sets (1-based packet ids)."""

    num_packets: int
    has_sets: tuple

    def __post_init__(self):
        object.__setattr__(self, "has_sets", tuple(frozenset(h) for h in self.has_sets))
        # Bit-vector per client: bit (p-1) set iff packet p is held.  Union
        # cardinality is then popcount of an OR, the artifact's hot path.
        masks = tuple(sum(1 << (p - 1) for p in h) for h in self.has_sets)
        object.__setattr__(self, "_masks", masks)

    @property
    def num_clients(self) -> int:
        return len(self.has_sets)

    @property
    def clients(self) -> frozenset:
        return frozenset(range(1, self.num_clients + 1))


@dataclass
class EvalContext:
    """Single-owner mutable scope for one solve: gamma counter plus seed."""

    rng_seed: int = 0
    gamma_count: int = 0

    def charge(self) -> None:
        self.gamma_count += 1


def validate(instance: Instance):
    """Check Instance invariants.  Returns None if ok, else a message string."""
    L, K = instance.num_packets, instance.num_clients
    if L < 1:
        return "num_packets must be >= 1"
    if K < 2:
        return "need at least 2 clients (K >= 2), got %d" % K
    for j, h in enumerate(instance.has_sets, start=1):
        for p in h:
            if not isinstance(p, int) or p < 1 or p > L:
                return "client %d holds packet %r outside 1..%d" % (j, p, L)
    covered = frozenset().union(*instance.has_sets) if instance.has_sets else frozenset()
    missing = sorted(set(range(1, L + 1)) - covered)
    if missing:
        return "packet %d is not held by any client" % missing[0]
    return None


def check_valid(instance: Instance) -> None:
    msg = validate(instance)
    if msg is not None:
        raise InstanceError(msg)


def union_size(ctx: EvalContext, instance: Instance, coalition) -> int:
    """|H_X| for coalition X; charges exactly one gamma unit per call."""
    m = 0
    masks = instance._masks
    K = instance.num_clients
    for j in coalition:
        if not 1 <= j <= K:
            raise InstanceError("client id %r out of range 1..%d" % (j, K))
        m |= masks[j - 1]
    ctx.charge()
    return m.bit_count()


def random_instance(K: int, L: int, density: float, seed: int) -> Instance:
    """Random has-sets: each packet lands in each set w.p. density, then any
    uncovered packet is assigned to a uniformly chosen client."""
    if K < 2 or L < 1 or not 0.0 < density < 1.0:
        raise InstanceError("require K >= 2, L >= 1, 0 < density < 1")
    rng = random.Random(seed)
    has_sets = [set() for _ in range(K)]
    for j in range(K):
        for p in range(1, L + 1):
            if rng.random() < density:
                has_sets[j].add(p)
    for p in range(1, L + 1):
        if not any(p in h for h in has_sets):
            has_sets[rng.randrange(K)].add(p)
    return Instance(L, tuple(has_sets))


def to_json(instance: Instance) -> str:
    return json.dumps({
        "L": instance.num_packets,
        "has_sets": [sorted(h) for h in instance.has_sets],
    })


def from_json(text: str) -> Instance:
    try:
        obj = json.loads(text)
        inst = Instance(int(obj["L"]), tuple(frozenset(map(int, h)) for h in obj["has_sets"]))
    except (KeyError, TypeError, ValueError) as exc:
        raise InstanceError("malformed instance file: %s" % exc) from exc
    check_valid(inst)
    return inst


def load(path: str) -> Instance:
    with open(path) as fh:
        return from_json(fh.read())
