"""Exact rank over the rationals and the adjacency-rank partition bound.

A biclique's adjacency matrix has rank 2 and a partition writes A(G) as a sum
of them, so ``bp(G) >= rank(A(G)) / 2``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .graph import Graph


@dataclass(frozen=True)
class RationalMatrix:
    entries: tuple[tuple[Fraction, ...], ...]

    def __post_init__(self) -> None:
        rows = tuple(tuple(Fraction(x) for x in row) for row in self.entries)
        if not rows or not rows[0]:
            raise ValueError("matrix dimensions must be positive")
        if any(len(r) != len(rows[0]) for r in rows):
            raise ValueError("ragged matrix")
        object.__setattr__(self, "entries", rows)

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence]) -> RationalMatrix:
        return cls(tuple(tuple(r) for r in rows))

    @classmethod
    def identity(cls, n: int) -> RationalMatrix:
        return cls.from_rows([[int(i == j) for j in range(n)] for i in range(n)])

    @property
    def rows(self) -> int:
        return len(self.entries)

    @property
    def cols(self) -> int:
        return len(self.entries[0])

    def transpose(self) -> RationalMatrix:
        return RationalMatrix(tuple(zip(*self.entries)))

    def __getitem__(self, ij: tuple[int, int]) -> Fraction:
        i, j = ij
        return self.entries[i][j]


def adjacency_matrix(g: Graph) -> RationalMatrix:
    if g.n == 0:
        raise ValueError("adjacency matrix of the graph on no vertices")
    return RationalMatrix.from_rows(
        [[int(g.has_edge(i, j)) for j in g.vertices] for i in g.vertices]
    )


def _integer_rows(m: RationalMatrix) -> list[list[int]]:
    out = []
    for row in m.entries:
        scale = math.lcm(*(x.denominator for x in row))
        out.append([int(x * scale) for x in row])
    return out


def bareiss_rank(rows: list[list[int]]) -> int:
    """Rank of an integer matrix by fraction-free elimination (mutates ``rows``).

    Pivot: first nonzero entry at or below the current row, columns left to
    right.  Every division is exact.
    """
    if not rows:
        return 0
    nrows, ncols = len(rows), len(rows[0])
    r = 0
    prev = 1
    for c in range(ncols):
        if r == nrows:
            break
        p = next((i for i in range(r, nrows) if rows[i][c]), None)
        if p is None:
            continue
        if p != r:
            rows[r], rows[p] = rows[p], rows[r]
        piv_row = rows[r]
        piv = piv_row[c]
        for i in range(r + 1, nrows):
            row = rows[i]
            f = row[c]
            for j in range(c + 1, ncols):
                row[j] = (piv * row[j] - f * piv_row[j]) // prev
            row[c] = 0
        prev = piv
        r += 1
    return r


def rank_exact(m: RationalMatrix) -> int:
    # scaling a row by a nonzero integer leaves the rank unchanged
    return bareiss_rank(_integer_rows(m))


def bp_rank_lower_bound(g: Graph) -> int:
    if g.m == 0:
        return 0
    return -(-rank_exact(adjacency_matrix(g)) // 2)
