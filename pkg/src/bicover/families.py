"""Graph families with their explicit biclique certificates.

Vertex orders are fixed so certificates are reproducible:

* complete graph / hypercube: vertex v carries the binary label of v - 1,
  most significant bit first;
* crown graph H_t: u^1..u^t are 1..t, v^1..v^t are t+1..2t;
* ternary and codimension-2 graphs: words in lexicographic order with
  0 < 1 < *;
* counterexample graph: x_1..x_m, then y_{i,j} for i < j lexicographically,
  then y_[m].
"""

from __future__ import annotations

import itertools
from typing import Callable, Sequence

from .graph import (
    Biclique,
    BicliqueCertificate,
    Graph,
    cover,
    partition,
    star,
)

ORDER = {"0": "0", "1": "1", "*": "2"}


def ceil_log2(n: int) -> int:
    """ceil(log2 n) for n >= 1, with ceil(log2 1) = 0."""
    if n < 1:
        raise ValueError("log of a non-positive count")
    return (n - 1).bit_length()


def _bit(value: int, i: int, width: int) -> int:
    """Bit ``i`` (1-based, most significant first) of ``value`` in ``width`` bits."""
    return (value >> (width - i)) & 1


def _check(cond: bool, msg: str) -> None:
    if not cond:
        raise ValueError(msg)


# --- complete graphs -------------------------------------------------------

def complete_graph(n: int) -> Graph:
    _check(n >= 1, "complete graph needs n >= 1")
    return Graph(n, frozenset(itertools.combinations(range(1, n + 1), 2)))


def star_partition(n: int) -> BicliqueCertificate:
    return partition(star(i, range(i + 1, n + 1)) for i in range(1, n))


def binary_cover(n: int) -> BicliqueCertificate:
    k = ceil_log2(n)
    out = []
    for i in range(1, k + 1):
        zeros = [v for v in range(1, n + 1) if not _bit(v - 1, i, k)]
        ones = [v for v in range(1, n + 1) if _bit(v - 1, i, k)]
        out.append(Biclique(frozenset(zeros), frozenset(ones)))
    return cover(out)


def _prefix_split(labels: Sequence[int], k: int):
    """Yield (bit, prefix, idx0, idx1): positions agreeing on the prefix, split at the bit."""
    for i in range(1, k + 1):
        groups: dict[int, tuple[list[int], list[int]]] = {}
        for pos, lab in enumerate(labels):
            groups.setdefault(lab >> (k - i + 1), ([], []))[_bit(lab, i, k)].append(pos)
        for prefix in sorted(groups):
            zeros, ones = groups[prefix]
            yield i, prefix, zeros, ones


def prefix_partition(n: int) -> BicliqueCertificate:
    """Each edge goes to the first bit where its endpoint labels differ."""
    k = ceil_log2(n)
    out = []
    for _, _, zeros, ones in _prefix_split(range(n), k):
        if zeros and ones:
            out.append(Biclique(frozenset(z + 1 for z in zeros), frozenset(o + 1 for o in ones)))
    return partition(out)


# --- crown graphs ----------------------------------------------------------

def crown_graph(t: int) -> Graph:
    _check(t >= 1, "crown graph needs t >= 1")
    es = [(i, t + j) for i in range(1, t + 1) for j in range(1, t + 1) if i != j]
    labels = tuple(f"u{i}" for i in range(1, t + 1)) + tuple(f"v{i}" for i in range(1, t + 1))
    return Graph(2 * t, frozenset(es), labels)


def crown_partition_on(us: Sequence[int], vs: Sequence[int]) -> list[Biclique]:
    """Partition of the crown on matched pairs (us[k], vs[k]), locality ceil(log t).

    Pair k gets the binary label k.  For every bit and every prefix of the
    preceding bits, emit (U with prefix+0, V with prefix+1) and
    (U with prefix+1, V with prefix+0); empty-sided bicliques are dropped.
    """
    t = len(us)
    if t < 2:
        return []
    k = ceil_log2(t)
    out = []
    for _, _, zeros, ones in _prefix_split(range(t), k):
        for a, b in ((zeros, ones), (ones, zeros)):
            if a and b:
                out.append(Biclique(frozenset(us[p] for p in a), frozenset(vs[p] for p in b)))
    return out


def crown_log_partition(t: int) -> BicliqueCertificate:
    return partition(crown_partition_on(range(1, t + 1), range(t + 1, 2 * t + 1)))


# --- hypercubes ------------------------------------------------------------

def hypercube(d: int) -> Graph:
    _check(d >= 1, "hypercube needs d >= 1")
    n = 1 << d
    es = [(x + 1, (x ^ (1 << b)) + 1) for x in range(n) for b in range(d) if not x >> b & 1]
    labels = tuple(format(x, f"0{d}b") for x in range(n))
    return Graph(n, frozenset(es), labels)


def cube_star_partition(d: int) -> BicliqueCertificate:
    out = []
    for x in range(1 << d):
        if bin(x).count("1") % 2 == 0:
            out.append(star(x + 1, ((x ^ (1 << b)) + 1 for b in range(d))))
    return partition(out)


def cube_c4_partition(d: int) -> BicliqueCertificate:
    """One K_{2,2} per coordinate pair (2i-1, 2i) and per setting of the rest."""
    _check(d >= 2 and d % 2 == 0, "the 4-cycle partition needs an even dimension")
    out = []
    for i in range(1, d // 2 + 1):
        ma, mb = 1 << (d - (2 * i - 1)), 1 << (d - 2 * i)
        for x in range(1 << d):
            if x & (ma | mb):
                continue
            out.append(Biclique(frozenset({x + 1, (x | ma | mb) + 1}),
                                frozenset({(x | ma) + 1, (x | mb) + 1})))
    return partition(out)


# --- ternary and codimension-2 graphs --------------------------------------

def _word_graph(words: Sequence[str]) -> Graph:
    # bucket words by fixed symbol per coordinate: u ~ v iff some coordinate has 0 vs 1
    n, m = len(words), len(words[0]) if words else 0
    es = set()
    for i in range(m):
        zeros = [p for p, w in enumerate(words, 1) if w[i] == "0"]
        ones = [p for p, w in enumerate(words, 1) if w[i] == "1"]
        es.update((min(a, b), max(a, b)) for a in zeros for b in ones)
    return Graph(n, frozenset(es), tuple(words))


def ternary_words(m: int) -> list[str]:
    return ["".join(w) for w in itertools.product("01*", repeat=m)]


def ternary_graph(m: int) -> Graph:
    """All of {0,1,*}^m; adjacent iff some coordinate reads 0 against 1."""
    _check(m >= 1, "ternary graph needs m >= 1")
    return _word_graph(ternary_words(m))


def _recursive_word_partition(m: int) -> list[tuple[frozenset[str], frozenset[str]]]:
    pi = [(frozenset({"0"}), frozenset({"1"}))]
    for k in range(1, m):
        rest = ternary_words(k)
        nxt = [(frozenset("0" + w for w in rest), frozenset("1" + w for w in rest))]
        for a, b in pi:
            nxt.append((frozenset({"*" + w for w in a} | {"0" + w for w in a}),
                        frozenset({"*" + w for w in b} | {"0" + w for w in b})))
            nxt.append((frozenset({"*" + w for w in a} | {"1" + w for w in a}),
                        frozenset("1" + w for w in b)))
            nxt.append((frozenset("1" + w for w in a), frozenset("*" + w for w in b)))
        pi = nxt
    return pi


def recursive_partition(m: int) -> BicliqueCertificate:
    """Partition of the ternary graph with (3^m - 1) / 2 bicliques.

    Built up one coordinate at a time: the new first-coordinate biclique,
    plus three lifted copies of every biclique of the previous stage.
    """
    _check(m >= 1, "recursive partition needs m >= 1")
    index = {w: i for i, w in enumerate(ternary_words(m), 1)}
    return partition(
        Biclique(frozenset(index[w] for w in a), frozenset(index[w] for w in b))
        for a, b in _recursive_word_partition(m)
    )


def codim2_words(m: int) -> list[str]:
    """Words of length m with exactly m - 2 stars, sorted with 0 < 1 < *."""
    _check(m >= 2, "codimension-2 words need m >= 2")
    words = []
    for i, j in itertools.combinations(range(m), 2):
        for a, b in itertools.product("01", repeat=2):
            w = ["*"] * m
            w[i], w[j] = a, b
            words.append("".join(w))
    return sorted(words, key=lambda w: "".join(ORDER[c] for c in w))


def codim2_graph(m: int) -> Graph:
    return _word_graph(codim2_words(m))


def coordinate_bicliques(words: Sequence[str]) -> list[Biclique]:
    """Biclique i: (words with 0 at i, words with 1 at i), vertices 1-based."""
    m = len(words[0]) if words else 0
    out = []
    for i in range(m):
        zeros = frozenset(p for p, w in enumerate(words, 1) if w[i] == "0")
        ones = frozenset(p for p, w in enumerate(words, 1) if w[i] == "1")
        out.append(Biclique(zeros, ones))
    return out


def covering_bicliques(m: int) -> BicliqueCertificate:
    return cover(coordinate_bicliques(codim2_words(m)))


# --- the bc / lbc separation graph -----------------------------------------

def counterexample_labels(m: int) -> list[tuple]:
    return (
        [("x", i) for i in range(1, m + 1)]
        + [("y", i, j) for i, j in itertools.combinations(range(1, m + 1), 2)]
        + [("y", "[m]")]
    )


def counterexample_graph(m: int) -> Graph:
    _check(m >= 4, "counterexample graph needs m >= 4")
    labels = counterexample_labels(m)
    idx = {lab: p for p, lab in enumerate(labels, 1)}
    es = []
    for i, j in itertools.combinations(range(1, m + 1), 2):
        es += [(i, idx["y", i, j]), (j, idx["y", i, j])]
    es += [(i, idx["y", "[m]"]) for i in range(1, m + 1)]
    names = tuple("x%d" % lab[1] if lab[0] == "x" else
                  "y[m]" if lab[1] == "[m]" else "y%d,%d" % lab[1:] for lab in labels)
    return Graph(len(labels), frozenset(es), names)


def two_local_partition(m: int) -> BicliqueCertificate:
    g = counterexample_graph(m)
    top = g.n
    out = [star(top, range(1, m + 1))]
    out += [star(i, sorted(g.neighbors(i) - {top})) for i in range(1, m + 1)]
    return partition(out)


def star_cover(m: int) -> BicliqueCertificate:
    g = counterexample_graph(m)
    return partition(star(i, sorted(g.neighbors(i))) for i in range(1, m + 1))


# --- registry used by the command line -------------------------------------

FAMILIES: dict[str, tuple[Callable[[int], Graph], dict[str, Callable[[int], BicliqueCertificate]]]] = {
    "complete": (complete_graph, {
        "star_partition": star_partition,
        "binary_cover": binary_cover,
        "prefix_partition": prefix_partition,
    }),
    "crown": (crown_graph, {"crown_log_partition": crown_log_partition}),
    "hypercube": (hypercube, {
        "cube_star_partition": cube_star_partition,
        "cube_c4_partition": cube_c4_partition,
    }),
    "ternary": (ternary_graph, {"recursive_partition": recursive_partition}),
    "codim2": (codim2_graph, {"covering_bicliques": covering_bicliques}),
    "counterexample": (counterexample_graph, {
        "two_local_partition": two_local_partition,
        "star_cover": star_cover,
    }),
}
