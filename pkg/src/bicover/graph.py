"""Simple graphs, bicliques and biclique certificates.

Vertices are the integers ``1..n``.  Every value here is immutable; operations
return new objects.  :func:`verify` is the reference check that every other
module (generators, transforms, the solver) is tested against.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, Iterator, Mapping, Sequence

COVER = "cover"
PARTITION = "partition"
MODES = (COVER, PARTITION)

Edge = tuple[int, int]


class StructureError(ValueError):
    """Input refers to vertices outside the graph or is otherwise malformed."""


def edge(u: int, v: int) -> Edge:
    return (u, v) if u < v else (v, u)


@dataclass(frozen=True)
class Graph:
    n: int
    edges: frozenset[Edge] = frozenset()
    # optional vertex names (ternary words, crown labels, ...), not part of equality
    labels: tuple | None = field(default=None, compare=False, repr=False)

    def __post_init__(self) -> None:
        if self.n < 0:
            raise StructureError(f"negative vertex count {self.n}")
        norm = set()
        for u, v in self.edges:
            if u == v:
                raise StructureError(f"loop at vertex {u}")
            if not (1 <= u <= self.n and 1 <= v <= self.n):
                raise StructureError(f"edge ({u}, {v}) outside 1..{self.n}")
            norm.add(edge(u, v))
        object.__setattr__(self, "edges", frozenset(norm))
        if self.labels is not None and len(self.labels) != self.n:
            raise StructureError("label count does not match vertex count")

    @property
    def m(self) -> int:
        return len(self.edges)

    @property
    def vertices(self) -> range:
        return range(1, self.n + 1)

    @cached_property
    def sorted_edges(self) -> tuple[Edge, ...]:
        return tuple(sorted(self.edges))

    @cached_property
    def _adj(self) -> tuple[frozenset[int], ...]:
        nbrs: list[set[int]] = [set() for _ in range(self.n + 1)]
        for u, v in self.edges:
            nbrs[u].add(v)
            nbrs[v].add(u)
        return tuple(frozenset(s) for s in nbrs)

    @cached_property
    def adjacency_masks(self) -> tuple[int, ...]:
        """Neighbourhood bitmasks, 0-based: bit ``j`` of entry ``i`` is edge {i+1, j+1}."""
        masks = [0] * self.n
        for u, v in self.edges:
            masks[u - 1] |= 1 << (v - 1)
            masks[v - 1] |= 1 << (u - 1)
        return tuple(masks)

    def neighbors(self, v: int) -> frozenset[int]:
        return self._adj[v]

    def degree(self, v: int) -> int:
        return len(self._adj[v])

    def has_edge(self, u: int, v: int) -> bool:
        return 1 <= u <= self.n and v in self._adj[u]

    def label(self, v: int):
        return self.labels[v - 1] if self.labels is not None else v

    def __str__(self) -> str:
        return f"Graph(n={self.n}, m={self.m})"


def empty_graph(n: int) -> Graph:
    return Graph(n)


@dataclass(frozen=True)
class Biclique:
    """Two vertex classes; the edge set is the full cross product."""

    class0: frozenset[int]
    class1: frozenset[int]

    def __post_init__(self) -> None:
        object.__setattr__(self, "class0", frozenset(self.class0))
        object.__setattr__(self, "class1", frozenset(self.class1))

    @property
    def vertices(self) -> frozenset[int]:
        return self.class0 | self.class1

    @property
    def shape(self) -> tuple[int, int]:
        return (len(self.class0), len(self.class1))

    @property
    def size(self) -> int:
        """Number of edges."""
        return len(self.class0) * len(self.class1)

    def edges(self) -> Iterator[Edge]:
        for u in sorted(self.class0):
            for v in sorted(self.class1):
                yield edge(u, v)

    def contains_edge(self, u: int, v: int) -> bool:
        return (u in self.class0 and v in self.class1) or (
            v in self.class0 and u in self.class1
        )

    def side_of(self, v: int) -> int | None:
        if v in self.class0:
            return 0
        if v in self.class1:
            return 1
        return None

    def is_star(self) -> bool:
        return min(self.shape) == 1

    def normalized(self) -> Biclique:
        """Orientation with the lexicographically smaller side first."""
        a, b = sorted(self.class0), sorted(self.class1)
        return self if a <= b else Biclique(self.class1, self.class0)

    def swapped(self) -> Biclique:
        return Biclique(self.class1, self.class0)

    def relabel(self, mapping: Mapping[int, int]) -> Biclique:
        return Biclique(
            frozenset(mapping[v] for v in self.class0),
            frozenset(mapping[v] for v in self.class1),
        )

    def __str__(self) -> str:
        a = ",".join(map(str, sorted(self.class0)))
        b = ",".join(map(str, sorted(self.class1)))
        return f"({{{a}}}, {{{b}}})"


def star(center: int, leaves: Iterable[int]) -> Biclique:
    return Biclique(frozenset([center]), frozenset(leaves))


@dataclass(frozen=True)
class BicliqueCertificate:
    bicliques: tuple[Biclique, ...]
    mode: str = COVER

    def __post_init__(self) -> None:
        if self.mode not in MODES:
            raise ValueError(f"unknown certificate mode {self.mode!r}")
        object.__setattr__(self, "bicliques", tuple(self.bicliques))

    def __len__(self) -> int:
        return len(self.bicliques)

    def __iter__(self) -> Iterator[Biclique]:
        return iter(self.bicliques)

    def as_mode(self, mode: str) -> BicliqueCertificate:
        return BicliqueCertificate(self.bicliques, mode)

    def relabel(self, mapping: Mapping[int, int]) -> BicliqueCertificate:
        return BicliqueCertificate(tuple(b.relabel(mapping) for b in self), self.mode)


def cover(bicliques: Iterable[Biclique]) -> BicliqueCertificate:
    return BicliqueCertificate(tuple(bicliques), COVER)


def partition(bicliques: Iterable[Biclique]) -> BicliqueCertificate:
    return BicliqueCertificate(tuple(bicliques), PARTITION)


@dataclass(frozen=True)
class Verdict:
    valid: bool
    reason: str = ""

    def __bool__(self) -> bool:
        return self.valid


@dataclass(frozen=True)
class LocalityProfile:
    counts: Mapping[int, int]
    max: int


def _check_range(g: Graph, cert: BicliqueCertificate) -> None:
    for i, b in enumerate(cert, 1):
        for v in b.vertices:
            if not 1 <= v <= g.n:
                raise StructureError(f"biclique {i}: vertex {v} outside 1..{g.n}")


def verify(g: Graph, cert: BicliqueCertificate) -> Verdict:
    """Check that ``cert`` is a cover/partition of ``g`` by bicliques of ``g``.

    Raises :class:`StructureError` for vertex indices outside ``1..n``; every
    other defect produces an invalid verdict naming the first offending
    biclique (in list order) or edge (in lexicographic order).
    """
    _check_range(g, cert)
    multiplicity: Counter[Edge] = Counter()
    for i, b in enumerate(cert, 1):
        if not b.class0 or not b.class1:
            return Verdict(False, f"biclique {i} {b} has an empty class")
        if b.class0 & b.class1:
            return Verdict(False, f"biclique {i} {b} has overlapping classes")
        for e in b.edges():
            if e not in g.edges:
                return Verdict(False, f"biclique {i} {b}: {{{e[0]},{e[1]}}} is not an edge")
            multiplicity[e] += 1
    for e in g.sorted_edges:
        c = multiplicity[e]
        if c == 0:
            return Verdict(False, f"edge {{{e[0]},{e[1]}}} is not covered")
        if cert.mode == PARTITION and c > 1:
            return Verdict(False, f"edge {{{e[0]},{e[1]}}} is covered {c} times")
    return Verdict(True)


def locality(cert: BicliqueCertificate, n: int | None = None) -> LocalityProfile:
    """Per-vertex membership counts; with ``n`` given, vertices 1..n all appear."""
    counts: Counter[int] = Counter()
    if n is not None:
        counts.update({v: 0 for v in range(1, n + 1)})
    for b in cert:
        for v in b.vertices:
            counts[v] += 1
    return LocalityProfile(dict(sorted(counts.items())), max(counts.values(), default=0))


def complement(g: Graph) -> Graph:
    es = [
        (u, v)
        for u in range(1, g.n + 1)
        for v in range(u + 1, g.n + 1)
        if (u, v) not in g.edges
    ]
    return Graph(g.n, frozenset(es))


def induced_subgraph(g: Graph, s: Iterable[int]) -> Graph:
    """Subgraph on ``s``, reindexed ``1..|s|`` in increasing original order."""
    keep = sorted(set(s))
    for v in keep:
        if not 1 <= v <= g.n:
            raise StructureError(f"vertex {v} outside 1..{g.n}")
    pos = {v: i for i, v in enumerate(keep, 1)}
    es = [(pos[u], pos[v]) for u, v in g.edges if u in pos and v in pos]
    labels = tuple(g.labels[v - 1] for v in keep) if g.labels is not None else None
    return Graph(len(keep), frozenset(es), labels)


def delete_vertex(g: Graph, v: int) -> Graph:
    return induced_subgraph(g, [u for u in g.vertices if u != v])


def identification_map(n: int, pairs: Sequence[tuple[int, int]]) -> dict[int, int]:
    """Vertex map for merging each pair; survivors keep their relative order.

    A merged pair lands on the position of its smaller vertex.
    """
    seen: set[int] = set()
    rep = {v: v for v in range(1, n + 1)}
    for a, b in pairs:
        if a == b:
            raise StructureError(f"cannot identify vertex {a} with itself")
        for v in (a, b):
            if not 1 <= v <= n:
                raise StructureError(f"vertex {v} outside 1..{n}")
            if v in seen:
                raise StructureError(f"vertex {v} appears in more than one pair")
            seen.add(v)
        lo, hi = min(a, b), max(a, b)
        rep[hi] = lo
    survivors = sorted(set(rep.values()))
    pos = {v: i for i, v in enumerate(survivors, 1)}
    return {v: pos[rep[v]] for v in range(1, n + 1)}


def identify_vertices(g: Graph, pairs: Sequence[tuple[int, int]]) -> Graph:
    """Merge each pair into one vertex, dropping loops and parallel edges."""
    mp = identification_map(g.n, pairs)
    es = {edge(mp[u], mp[v]) for u, v in g.edges if mp[u] != mp[v]}
    return Graph(max(mp.values(), default=0), frozenset(es))


def relabel_graph(g: Graph, perm: Mapping[int, int]) -> Graph:
    return Graph(g.n, frozenset(edge(perm[u], perm[v]) for u, v in g.edges))
