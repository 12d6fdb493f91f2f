"""Constructive transforms between covers and partitions.

* restriction of a partition biclique onto a coordinate biclique, the
  star / K_{2,2} / other classification and the red/blue colourings of the
  shared edges of the codimension-2 graph;
* extraction of a crown-graph partition from any partition of that graph,
  without raising locality;
* folding a crown cover onto a cover of the complete graph;
* turning a 2-local m-cover into a partition of locality at most
  2 * ceil(log2(m - 1)) + 2;
* strongly independent edges, a lower bound for the cover number.
"""

from __future__ import annotations

import enum
import itertools
from collections import defaultdict
from dataclasses import dataclass, field

from ._clique import max_clique
from .families import (
    ceil_log2,
    codim2_graph,
    codim2_words,
    complete_graph,
    coordinate_bicliques,
    crown_graph,
    crown_partition_on,
)
from .graph import (
    COVER,
    PARTITION,
    Biclique,
    BicliqueCertificate,
    Edge,
    Graph,
    edge,
    identification_map,
    locality,
    verify,
)


class RestrictionClass(enum.Enum):
    STAR = "star"
    K22 = "K22"
    OTHER = "other"


RED = "red"
BLUE = "blue"


def classify(b: Biclique) -> RestrictionClass:
    if b.is_star():
        return RestrictionClass.STAR
    if b.shape == (2, 2):
        return RestrictionClass.K22
    return RestrictionClass.OTHER


def shared_edge_table(g: Graph, cover: BicliqueCertificate) -> dict[Edge, frozenset[int]]:
    """Edge -> 1-based indices of the cover bicliques containing it."""
    table: dict[Edge, set[int]] = defaultdict(set)
    for i, b in enumerate(cover, 1):
        for e in b.edges():
            table[e].add(i)
    for e in g.edges:
        if e not in table:
            raise ValueError(f"edge {e} is not covered")
    return {e: frozenset(table[e]) for e in sorted(table)}


def restrict_biclique(a: Biclique, b_i: Biclique, e: Edge) -> Biclique:
    """The component of A ∩ B_i containing ``e``, oriented like ``a``.

    A ∩ B_i keeps the vertices of both and the edges of both; it splits into
    the bicliques (A0 on side s of B_i, A1 on side 1-s) for s = 0, 1.
    """
    u, v = e
    if not a.contains_edge(u, v) or not b_i.contains_edge(u, v):
        raise ValueError(f"edge {e} is not in both bicliques")
    x = u if u in a.class0 else v
    s = b_i.side_of(x)
    c0 = frozenset(w for w in a.class0 if b_i.side_of(w) == s)
    c1 = frozenset(w for w in a.class1 if b_i.side_of(w) == 1 - s)
    return Biclique(c0, c1)


@dataclass(frozen=True)
class Restriction:
    biclique: Biclique
    kind: RestrictionClass
    color: str


@dataclass
class Classification:
    m: int
    graph: Graph
    words: list[str]
    covering: list[Biclique]
    partition: BicliqueCertificate
    shared: dict[Edge, tuple[int, int]]  # shared edge -> its two coordinates (1-based)
    owner: dict[Edge, int]  # edge -> 1-based index of the partition biclique holding it
    entries: dict[tuple[Edge, int], Restriction] = field(default_factory=dict)

    def red_edges(self, i: int) -> list[Edge]:
        return sorted(e for e, ij in self.shared.items()
                      if i in ij and self.entries[e, i].color == RED)

    def blue_count(self, e: Edge) -> int:
        return sum(self.entries[e, i].color == BLUE for i in self.shared[e])


def _codim2_shared(words: list[str]) -> dict[Edge, tuple[int, int]]:
    index = {w: p for p, w in enumerate(words, 1)}
    out = {}
    for w, p in index.items():
        fixed = [i for i, c in enumerate(w) if c != "*"]
        flipped = "".join({"0": "1", "1": "0"}.get(c, c) for c in w)
        q = index.get(flipped)
        if q is not None and len(fixed) == 2:
            out[edge(p, q)] = (fixed[0] + 1, fixed[1] + 1)
    return dict(sorted(out.items()))


def classify_restrictions(m: int, pi: BicliqueCertificate) -> Classification:
    """Restrict, classify and colour every shared edge of the codimension-2 graph.

    c_i(e) is red when the restriction onto covering biclique i is a star or a
    K_{2,2}.  Raises RuntimeError if some shared edge has neither restriction
    a star and not both K_{2,2}; for a genuine partition that cannot happen.
    """
    g = codim2_graph(m)
    verdict = verify(g, pi.as_mode(PARTITION))
    if not verdict:
        raise ValueError(f"not a partition of the codimension-2 graph: {verdict.reason}")
    words = codim2_words(m)
    covering = coordinate_bicliques(words)
    owner = {e: idx for idx, b in enumerate(pi, 1) for e in b.edges()}
    cls = Classification(m, g, words, covering, pi, _codim2_shared(words), owner)
    S, K = RestrictionClass.STAR, RestrictionClass.K22
    for e, (i, j) in cls.shared.items():
        a = pi.bicliques[owner[e] - 1]
        kinds = {}
        for c in (i, j):
            r = restrict_biclique(a, covering[c - 1], e)
            kinds[c] = classify(r)
            color = RED if kinds[c] in (S, K) else BLUE
            cls.entries[e, c] = Restriction(r, kinds[c], color)
        if not (S in (kinds[i], kinds[j]) or kinds[i] == kinds[j] == K):
            raise RuntimeError(f"shared edge {e}: restrictions {kinds[i]}, {kinds[j]}")
    return cls


@dataclass
class CrownExtraction:
    t: int
    crown: Graph
    partition: BicliqueCertificate
    coordinate: int  # covering biclique the crown was cut from (1-based)
    pairs: list[Edge]  # (u^k, v^k) in the codimension-2 graph, k in I
    skipped: int = 0  # indices dropped because a later K_{2,2} reached back into I


def extract_crown_partition(m: int, pi: BicliqueCertificate) -> CrownExtraction:
    """Cut a crown graph out of one covering biclique and induce its partition."""
    if m < 4:
        raise ValueError("crown extraction needs m >= 4")
    cls = classify_restrictions(m, pi)
    reds = {i: cls.red_edges(i) for i in range(1, m + 1)}
    coord = max(range(1, m + 1), key=lambda i: (len(reds[i]), -i))
    if len(reds[coord]) < m - 1:
        raise RuntimeError(f"no covering biclique has {m - 1} red shared edges")
    c0 = cls.covering[coord - 1].class0
    labelled = []
    for p, q in reds[coord][: m - 1]:
        labelled.append((p, q) if p in c0 else (q, p))
    where = {w: k for k, pq in enumerate(labelled) for w in pq}

    chosen: list[int] = []
    dropped: set[int] = set()
    skipped = 0
    for k, (u, v) in enumerate(labelled):
        if k in dropped:
            continue
        r = cls.entries[edge(u, v), coord]
        if r.kind is RestrictionClass.K22:
            touched = {where[w] for w in r.biclique.vertices if w in where} - {k}
            if touched & set(chosen):
                skipped += 1
                continue
            dropped |= touched
        chosen.append(k)
    t = len(chosen)
    if 3 * t < m - 1:
        raise RuntimeError(f"only {t} crown indices survived for m = {m}")

    us = [labelled[k][0] for k in chosen]
    vs = [labelled[k][1] for k in chosen]
    pos = {w: p for p, w in enumerate(us, 1)} | {w: t + p for p, w in enumerate(vs, 1)}
    partner = {u: v for u, v in zip(us, vs)} | {v: u for u, v in zip(us, vs)}
    uset, vset = set(us), set(vs)

    induced = []
    for a in pi:
        x0, x1 = a.class0 & pos.keys(), a.class1 & pos.keys()
        for side_x, side_y in ((x0 & uset, x1 & vset), (x0 & vset, x1 & uset)):
            if not side_x or not side_y:
                continue
            cut_x = {x for x in side_x if partner[x] in side_y}
            if cut_x:
                # this component holds removed matching edges, so it must be a star
                if len(side_x) == 1:
                    side_y = side_y - {partner[x] for x in cut_x}
                elif len(side_y) == 1:
                    side_x = side_x - cut_x
                else:
                    raise RuntimeError("a removed edge sits in a non-star component")
            if side_x and side_y:
                induced.append(Biclique(frozenset(pos[w] for w in side_x),
                                        frozenset(pos[w] for w in side_y)))
    crown = crown_graph(t)
    cert = BicliqueCertificate(tuple(induced), PARTITION)
    verdict = verify(crown, cert)
    if not verdict:
        raise RuntimeError(f"induced crown partition is invalid: {verdict.reason}")
    before = locality(pi).counts
    inv = {p: w for w, p in pos.items()}
    for v, c in locality(cert).counts.items():
        if c > before.get(inv[v], 0):
            raise RuntimeError(f"crown vertex {v} gained locality")
    return CrownExtraction(t, crown, cert, coord, [labelled[k] for k in chosen], skipped)


@dataclass
class FoldResult:
    cover: BicliqueCertificate
    folded_counts: dict[int, int]
    folded_max: int
    original_max: int
    heavy_vertex: int  # crown vertex lying in at least ceil(folded_max / 2) bicliques


def fold_crown_cover(t: int, cert: BicliqueCertificate) -> FoldResult:
    """Identify u^i with v^i: a cover of H_t becomes a cover of K_t."""
    crown = crown_graph(t)
    verdict = verify(crown, cert.as_mode(COVER))
    if not verdict:
        raise ValueError(f"not a cover of the crown graph: {verdict.reason}")
    mp = identification_map(2 * t, [(i, t + i) for i in range(1, t + 1)])
    folded = []
    for b in cert:
        nb = b.relabel(mp)
        if nb.class0 & nb.class1:
            raise ValueError(f"biclique {b} holds u^i and v^i on opposite sides")
        folded.append(nb)
    out = BicliqueCertificate(tuple(folded), COVER)
    assert verify(complete_graph(t), out), "fold did not give a cover of K_t"
    orig = locality(cert, 2 * t).counts
    counts = locality(out, t).counts
    for i in range(1, t + 1):
        assert counts[i] == orig[i] + orig[t + i]
    top = max(counts.values(), default=0)
    heavy = max(orig, key=lambda v: (orig[v], -v)) if orig else 0
    assert orig.get(heavy, 0) >= -(-top // 2)
    return FoldResult(out, counts, top, max(orig.values(), default=0), heavy)


def log_locality_bound(m: int) -> int:
    """2 * ceil(log2(m - 1)) + 2."""
    return 2 * ceil_log2(m - 1) + 2


def localize_bound(m: int) -> int:
    """Locality guaranteed by :func:`localize_cover`.

    For m = 2 the worst graph (all words over {0,1,*}^2 but **) has lbp 3,
    one more than ``log_locality_bound(2)``, so no construction can do better there.
    """
    return 3 if m == 2 else log_locality_bound(m)


def localize_cover(g: Graph, cover: BicliqueCertificate) -> BicliqueCertificate:
    """Partition of ``g`` of locality <= 2*ceil(log2(m-1)) + 2 from a 2-local m-cover.

    (For m = 2 the guarantee is 3; see :func:`localize_bound`.)

    Vertices are read as words over {0,1,*} by cover membership.  Each
    coordinate biclique B_i keeps its unshared edges; the (at most two) edges
    shared by B_i and B_j are split one to each side.  What B_i keeps is a
    complete bipartite graph minus a matching, partitioned as
    (unmatched left, right), (matched left, unmatched right) and a crown
    partition of the matched pairs.  Vertices with identical words get the
    same bicliques as their representative.
    """
    verdict = verify(g, cover.as_mode(COVER))
    if not verdict:
        raise ValueError(f"not a cover: {verdict.reason}")
    if locality(cover).max > 2:
        raise ValueError("cover is not 2-local")
    m = len(cover)
    if m < 2:
        raise ValueError("need a cover with at least two bicliques")
    bl = cover.bicliques
    words = {v: "".join("0" if v in b.class0 else "1" if v in b.class1 else "*" for b in bl)
             for v in g.vertices}
    twins: dict[str, list[int]] = defaultdict(list)
    for v in g.vertices:
        twins[words[v]].append(v)
    rep_of = {w: vs[0] for w, vs in twins.items()}

    # shared edges between representatives, grouped by coordinate pair
    by_pair: dict[tuple[int, int], list[Edge]] = defaultdict(list)
    for w, p in rep_of.items():
        fixed = [i for i, c in enumerate(w) if c != "*"]
        if len(fixed) != 2:
            continue
        flipped = "".join({"0": "1", "1": "0"}.get(c, c) for c in w)
        q = rep_of.get(flipped)
        if q is not None and p < q:
            by_pair[fixed[0], fixed[1]].append((p, q))
    removed: dict[int, list[Edge]] = defaultdict(list)  # coordinate -> edges it gives away
    for (i, j), es in sorted(by_pair.items()):
        es.sort()
        if m == 2:
            # both to C_1: C_1 stays a full biclique, C_2 loses a matching
            removed[j] += es
            continue
        removed[j].append(es[0])
        removed[i] += es[1:]

    out: list[Biclique] = []

    def expand(side) -> frozenset[int]:
        return frozenset(v for r in side for v in twins[words[r]])

    for i in range(m):
        left = sorted(p for w, p in rep_of.items() if w[i] == "0")
        right = sorted(p for w, p in rep_of.items() if w[i] == "1")
        match = sorted((p, q) if words[p][i] == "0" else (q, p) for p, q in removed[i])
        ml = [p for p, _ in match]
        mr = [q for _, q in match]
        ul = [p for p in left if p not in set(ml)]
        ur = [q for q in right if q not in set(mr)]
        parts = []
        if ul and right:
            parts.append(Biclique(frozenset(ul), frozenset(right)))
        if ml and ur:
            parts.append(Biclique(frozenset(ml), frozenset(ur)))
        parts += crown_partition_on(ml, mr)
        out += [Biclique(expand(b.class0), expand(b.class1)) for b in parts]

    cert = BicliqueCertificate(tuple(out), PARTITION)
    verdict = verify(g, cert)
    if not verdict:
        raise RuntimeError(f"localized partition is invalid: {verdict.reason}")
    if locality(cert).max > localize_bound(m):
        raise RuntimeError(f"locality {locality(cert).max} exceeds {localize_bound(m)}")
    return cert


# names used by the command-line interface contract
thm5_bound = log_locality_bound
thm5_localize = localize_cover


def strongly_independent(g: Graph, e: Edge, f: Edge) -> bool:
    """Vertex-disjoint edges whose four endpoints induce minimum degree 1."""
    for x in (e, f):
        if not g.has_edge(*x):
            raise ValueError(f"{x} is not an edge")
    quad = set(e) | set(f)
    if len(quad) < 4:
        return False
    return min(len(g.neighbors(v) & quad) for v in quad) == 1


def max_strongly_independent_set(g: Graph) -> list[Edge]:
    """A largest set of pairwise strongly independent edges (exhaustive)."""
    es = list(g.sorted_edges)
    adj = [0] * len(es)
    for a, b in itertools.combinations(range(len(es)), 2):
        if strongly_independent(g, es[a], es[b]):
            adj[a] |= 1 << b
            adj[b] |= 1 << a
    return [es[i] for i in max_clique(adj)]
