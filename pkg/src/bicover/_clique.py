"""Exact maximum clique on bitmask adjacency (small graphs only)."""

from __future__ import annotations

from typing import Sequence


def bits(mask: int):
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def max_clique(adj: Sequence[int]) -> list[int]:
    """A maximum clique as a sorted list of 0-based vertices.

    Plain branch and bound: branch on the lowest candidate vertex, prune when
    the current clique plus all remaining candidates cannot beat the best.
    """
    best: list[int] = []
    cur: list[int] = []

    def expand(cand: int) -> None:
        nonlocal best
        if not cand:
            if len(cur) > len(best):
                best = cur.copy()
            return
        while cand:
            if len(cur) + cand.bit_count() <= len(best):
                return
            low = cand & -cand
            v = low.bit_length() - 1
            cur.append(v)
            expand(cand & adj[v])
            cur.pop()
            cand ^= low

    expand((1 << len(adj)) - 1)
    return sorted(best)
