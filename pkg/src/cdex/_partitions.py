"""
Set-partition enumeration via restricted growth strings (RGS).

A partition of n ordered elements is encoded as a string a_1..a_n with a_1 = 0
and a_{i+1} <= max(a_1..a_i) + 1; element i belongs to block a_i.  Generating
the strings in ascending lexicographic order yields every partition exactly
once, starting from the single-block partition (00..0) and ending at the
all-singletons partition (012..n-1).
"""

from __future__ import annotations


def rgs_partitions(elements, min_blocks: int, max_blocks: int):
    """Yield partitions of `elements` (any ordered iterable) with a block
    count in [min_blocks, max_blocks], in RGS lexicographic order.  Each
    partition is a tuple of frozensets, blocks ordered by first element."""
    elems = list(elements)
    n = len(elems)
    if not 1 <= min_blocks <= max_blocks <= n:
        raise ValueError("require 1 <= min_blocks <= max_blocks <= %d" % n)
    a = [0] * n

    def rec(i: int, mx: int):
        if i == n:
            nb = mx + 1
            if min_blocks <= nb <= max_blocks:
                blocks = [[] for _ in range(nb)]
                for idx, b in enumerate(a):
                    blocks[b].append(elems[idx])
                yield tuple(frozenset(b) for b in blocks)
            return
        # Prune: even sending every remaining element to a fresh block cannot
        # reach min_blocks, or we already exceed max_blocks.
        hi = min(mx + 1, max_blocks - 1)
        for b in range(hi + 1):
            a[i] = b
            if max(mx, b) + 1 + (n - 1 - i) >= min_blocks:
                yield from rec(i + 1, max(mx, b))

    yield from rec(1, 0)
