"""Subcubes of the hypercube and their intersection graphs.

A subcube of Q_d is a word over ``0``, ``1``, ``*`` of length d; ``*`` marks a
free coordinate.  Two subcubes meet iff no coordinate holds a 0 against a 1.
A family of n subcubes of Q_d is the same data as a d-cover of the complement
of its intersection graph: coordinate i contributes the biclique
(words with 0 at i, words with 1 at i).
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterable, Iterator

from .graph import (
    COVER,
    Biclique,
    BicliqueCertificate,
    Graph,
    StructureError,
    complement,
    verify,
)
from .solver import solve

ALPHABET = "01*"


@dataclass(frozen=True)
class Subcube:
    word: str

    def __post_init__(self) -> None:
        if isinstance(self.word, (tuple, list)):
            object.__setattr__(self, "word", "".join(self.word))
        if set(self.word) - set(ALPHABET):
            raise ValueError(f"subcube word {self.word!r} uses symbols outside 0, 1, *")

    def __len__(self) -> int:
        return len(self.word)

    def __getitem__(self, i: int) -> str:
        return self.word[i]

    def __str__(self) -> str:
        return self.word

    @property
    def dimension(self) -> int:
        return self.word.count("*")

    @property
    def codimension(self) -> int:
        return len(self.word) - self.dimension

    @property
    def free(self) -> tuple[int, ...]:
        """0-based free coordinates."""
        return tuple(i for i, c in enumerate(self.word) if c == "*")


@dataclass(frozen=True)
class SubcubeFamily:
    members: tuple[Subcube, ...]
    d: int

    def __post_init__(self) -> None:
        members = tuple(m if isinstance(m, Subcube) else Subcube(m) for m in self.members)
        for m in members:
            if len(m) != self.d:
                raise ValueError(f"subcube {m.word!r} does not have length {self.d}")
        object.__setattr__(self, "members", members)

    @classmethod
    def from_words(cls, words: Iterable[str], d: int | None = None) -> SubcubeFamily:
        words = list(words)
        if d is None:
            d = len(words[0]) if words else 0
        return cls(tuple(Subcube(w) for w in words), d)

    def __len__(self) -> int:
        return len(self.members)

    def __iter__(self) -> Iterator[Subcube]:
        return iter(self.members)

    def __getitem__(self, i: int) -> Subcube:
        return self.members[i]

    @property
    def words(self) -> list[str]:
        return [m.word for m in self.members]

    @property
    def dimensions(self) -> list[int]:
        return [m.dimension for m in self.members]


def intersects(s: Subcube, t: Subcube) -> bool:
    if len(s) != len(t):
        raise ValueError(f"length mismatch: {len(s)} vs {len(t)}")
    return not any(a != b and a != "*" and b != "*" for a, b in zip(s.word, t.word))


def intersection_graph(f: SubcubeFamily) -> Graph:
    n = len(f)
    es = [
        (i + 1, j + 1)
        for i, j in itertools.combinations(range(n), 2)
        if intersects(f[i], f[j])
    ]
    return Graph(n, frozenset(es), tuple(f.words))


def all_subcubes(m: int) -> SubcubeFamily:
    """Every subcube of Q_m, in lexicographic order with 0 < 1 < *."""
    return SubcubeFamily.from_words(("".join(w) for w in itertools.product(ALPHABET, repeat=m)), m)


def cover_to_family(g: Graph, cert: BicliqueCertificate) -> SubcubeFamily:
    """Subcube representation of ``g`` from a cover of its complement."""
    verdict = verify(complement(g), cert.as_mode(COVER))
    if not verdict:
        raise ValueError(f"not a cover of the complement: {verdict.reason}")
    words = []
    for v in g.vertices:
        words.append("".join(
            "0" if v in b.class0 else "1" if v in b.class1 else "*" for b in cert
        ))
    return SubcubeFamily.from_words(words, len(cert))


def family_to_cover(f: SubcubeFamily) -> tuple[Graph, BicliqueCertificate, int]:
    """Intersection graph, cover of its complement, and dropped-coordinate count.

    Coordinates whose 0-class or 1-class is empty contribute no edges and are
    left out of the certificate; ``len(cert) + dropped == f.d``.
    """
    g = intersection_graph(f)
    bicliques = []
    dropped = 0
    for i in range(f.d):
        zeros = frozenset(v for v, s in enumerate(f, 1) if s[i] == "0")
        ones = frozenset(v for v, s in enumerate(f, 1) if s[i] == "1")
        if zeros and ones:
            bicliques.append(Biclique(zeros, ones))
        else:
            dropped += 1
    return g, BicliqueCertificate(tuple(bicliques), COVER), dropped


def pad_to_uniform(f: SubcubeFamily) -> SubcubeFamily:
    """Append ``*``s then ``0``s so every member has the maximum dimension."""
    if len(f) == 0:
        return f
    dims = f.dimensions
    hi, lo = max(dims), min(dims)
    extra = hi - lo
    words = [s.word + "*" * (hi - k) + "0" * (extra - (hi - k)) for s, k in zip(f, dims)]
    return SubcubeFamily.from_words(words, f.d + extra)


def restrict_dominating(
    f: SubcubeFamily, idx: int, require_uniform: bool = False
) -> SubcubeFamily:
    """Drop member ``idx`` (1-based) and keep only its free coordinates.

    Member ``idx`` must meet every other member.  Wherever it is fixed, every
    other member is free or agrees with it, so those coordinates never
    separate two of the remaining members and can be discarded.
    """
    if not 1 <= idx <= len(f):
        raise StructureError(f"member index {idx} outside 1..{len(f)}")
    if require_uniform and len(set(f.dimensions)) > 1:
        raise ValueError("members have unequal dimensions")
    dom = f[idx - 1]
    for j, s in enumerate(f, 1):
        if j != idx and not intersects(dom, s):
            raise ValueError(f"member {idx} does not meet member {j}")
    keep = dom.free
    words = ["".join(s[i] for i in keep) for j, s in enumerate(f, 1) if j != idx]
    return SubcubeFamily.from_words(words, len(keep))


def add_universal_vertex(g: Graph) -> Graph:
    es = set(g.edges) | {(v, g.n + 1) for v in g.vertices}
    return Graph(g.n + 1, frozenset(es))


def rho(g: Graph, **solve_kw) -> tuple[int, SubcubeFamily]:
    """Least d with ``g`` an intersection graph of subcubes of Q_d, plus a witness."""
    res = solve(complement(g), "bc", **solve_kw)
    res.raise_if_incomplete()
    return res.value, cover_to_family(g, res.witness)


def tau(g: Graph, **solve_kw) -> tuple[int, SubcubeFamily]:
    """Least r with ``g`` an intersection graph of r-dimensional subcubes.

    The solver minimises, over covers of the complement, the largest number
    of cover bicliques missing a vertex; padding that cover's family to
    uniform dimension realises exactly that value.
    """
    res = solve(complement(g), "tau", **solve_kw)
    res.raise_if_incomplete()
    fam = pad_to_uniform(cover_to_family(g, res.witness))
    return res.value, fam

