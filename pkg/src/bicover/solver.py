"""Exact biclique cover/partition numbers by branch and bound.

Measures:

* ``bc`` / ``bp``: fewest bicliques in a cover / partition;
* ``lbc`` / ``lbp``: least r admitting an r-local cover / partition;
* ``tau``: least, over covers, of the largest number of cover bicliques that
  miss a single vertex.  Applied to a complement this is the uniform subcube
  dimension of the original graph.

Every search is exhaustive, so an infeasible answer is a proof.  Branching
always happens on the uncovered edge with the fewest usable candidates, and
candidates are tried largest first, ties broken lexicographically.

Candidate pools.  Inclusion-maximal bicliques suffice for plain covers and
for the ``tau`` objective: growing a biclique never uncovers an edge and
never adds a miss.  Partitions and locality-capped covers need the full
biclique list, since growing a biclique can overlap another or push a vertex
over its cap.
"""

from __future__ import annotations

import math
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Sequence

from ._clique import bits, max_clique
from .families import ceil_log2
from .graph import (
    COVER,
    PARTITION,
    Biclique,
    BicliqueCertificate,
    Graph,
    locality,
    verify,
)
from .linalg import bp_rank_lower_bound

MEASURES = ("bc", "bp", "lbc", "lbp", "tau")
DEFAULT_CAP = 500_000
_PRIME = 2_147_483_647


class SearchTimeout(Exception):
    pass


class BicliqueOverflow(RuntimeError):
    pass


class IncompleteResult(RuntimeError):
    pass


@dataclass(frozen=True)
class SearchBudget:
    k: int | None = None  # most bicliques allowed
    r: int | None = None  # most bicliques per vertex
    misses: int | None = None  # most bicliques avoiding any one vertex
    time_limit: float | None = None

    def __post_init__(self) -> None:
        if self.k is None and self.r is None and self.misses is None:
            raise ValueError("a search budget needs k, r or misses")


@dataclass
class BoundReport:
    measure: str
    lower: int
    lower_reason: str
    upper: int | None = None
    witness: BicliqueCertificate | None = None

    def __str__(self) -> str:
        hi = "?" if self.upper is None else str(self.upper)
        return f"{self.measure}: lower {self.lower} ({self.lower_reason}), upper {hi}"


@dataclass
class Feasibility:
    status: str  # "feasible" | "infeasible" | "timeout"
    witness: BicliqueCertificate | None = None
    nodes: int = 0

    def __bool__(self) -> bool:
        return self.status == "feasible"


@dataclass
class SolveResult:
    measure: str
    value: int | None
    witness: BicliqueCertificate | None
    report: BoundReport
    complete: bool = True
    bracket: tuple[int, int] = field(default=(0, 0))

    def raise_if_incomplete(self) -> None:
        if not self.complete:
            lo, hi = self.bracket
            raise IncompleteResult(f"{self.measure} only bracketed in [{lo}, {hi}]")


# --- enumeration -----------------------------------------------------------

def _mask_set(mask: int) -> frozenset[int]:
    return frozenset(v + 1 for v in bits(mask))


def _common_neighbours(adj: Sequence[int], mask: int, full: int) -> int:
    out = full
    for v in bits(mask):
        out &= adj[v]
    return out


def _orient(a: int, b: int) -> tuple[int, int]:
    # class0 is the side holding the smallest vertex, hence lexicographically smaller
    return (a, b) if (a & -a) < (b & -b) else (b, a)


def enumerate_biclique_masks(g: Graph, maximal_only: bool = False,
                             cap: int = DEFAULT_CAP) -> list[tuple[int, int]]:
    """Bicliques as (class0, class1) vertex bitmasks (0-based), sorted."""
    adj = g.adjacency_masks
    n = g.n
    full = (1 << n) - 1
    found: set[tuple[int, int]] = set()

    def add(a: int, b: int) -> None:
        found.add(_orient(a, b))
        if len(found) > cap:
            raise BicliqueOverflow(f"more than {cap} bicliques")

    if maximal_only:
        # closed sets of A -> N(N(A)), each generated once by prefix-preserving extension
        def rec(closed: int, nbrs: int, last: int) -> None:
            for v in range(last + 1, n):
                if closed >> v & 1:
                    continue
                n2 = nbrs & adj[v]
                if not n2:
                    continue
                c2 = _common_neighbours(adj, n2, full)
                low = (1 << v) - 1
                if c2 & low != closed & low:
                    continue
                add(c2, n2)
                rec(c2, n2, v)

        rec(0, full, -1)
    else:
        def rec_all(a: int, na: int, first: int, last: int) -> None:
            for v in range(last + 1, n):
                nv = na & adj[v]
                if not nv:
                    continue
                a2 = a | (1 << v)
                f = v if first < 0 else first
                pool = nv & ~((1 << (f + 1)) - 1)
                sub = pool
                while sub:
                    add(a2, sub)
                    sub = (sub - 1) & pool
                rec_all(a2, nv, f, v)

        rec_all(0, full, -1, -1)

    def key(ab):
        return (sorted(bits(ab[0])), sorted(bits(ab[1])))

    return sorted(found, key=key)


def enumerate_bicliques(g: Graph, maximal_only: bool = False,
                        cap: int = DEFAULT_CAP) -> list[Biclique]:
    """All bicliques of ``g`` (or only the inclusion-maximal ones).

    Each appears once, oriented with the lexicographically smaller side as
    class 0.  Raises :class:`BicliqueOverflow` past ``cap`` bicliques.
    """
    return [Biclique(_mask_set(a), _mask_set(b))
            for a, b in enumerate_biclique_masks(g, maximal_only, cap)]


# --- the search ------------------------------------------------------------

def _mod_rank(rows: list[list[int]]) -> int:
    rank = 0
    ncols = len(rows[0]) if rows else 0
    for c in range(ncols):
        p = next((i for i in range(rank, len(rows)) if rows[i][c]), None)
        if p is None:
            continue
        rows[rank], rows[p] = rows[p], rows[rank]
        inv = pow(rows[rank][c], _PRIME - 2, _PRIME)
        pr = [x * inv % _PRIME for x in rows[rank]]
        rows[rank] = pr
        for i in range(rank + 1, len(rows)):
            f = rows[i][c]
            if f:
                rows[i] = [(x - f * y) % _PRIME for x, y in zip(rows[i], pr)]
        rank += 1
    return rank


class _Search:
    def __init__(self, g: Graph, mode: str, budget: SearchBudget,
                 pool: list[tuple[int, int]], deadline: float | None):
        self.g = g
        self.mode = mode
        self.k = budget.k
        self.r = budget.r
        self.cap = budget.misses
        self.deadline = deadline
        self.edges = g.sorted_edges
        eidx = {e: i for i, e in enumerate(self.edges)}
        self.full = (1 << len(self.edges)) - 1

        cands = []
        for a, b in pool:
            em = 0
            for u in bits(a):
                for v in bits(b):
                    em |= 1 << eidx[(min(u, v) + 1, max(u, v) + 1)]
            cands.append((em, a | b, a, b))
        # largest first; ties keep the lexicographic order of ``pool``
        order = sorted(range(len(cands)), key=lambda i: -cands[i][0].bit_count())
        self.cands = [cands[i] for i in order]
        self.cand_verts = [tuple(bits(c[1])) for c in self.cands]
        self.edge_cands: list[list[int]] = [[] for _ in self.edges]
        for ci, (em, _, _, _) in enumerate(self.cands):
            for e in bits(em):
                self.edge_cands[e].append(ci)
        self.maxsize = max((c[0].bit_count() for c in self.cands), default=0)
        self.failed: dict = {}
        self.rank_cache: dict[int, int] = {}
        self.nodes = 0
        self.counts = [0] * g.n
        self.chosen: list[int] = []

    # residual rank lower bound (partition only): bp(R) >= rank(R) / 2;
    # rank mod p never exceeds the rational rank, so the bound stays sound
    def _residual_need(self, covered: int) -> int:
        need = self.rank_cache.get(covered)
        if need is None:
            n = self.g.n
            rows = [[0] * n for _ in range(n)]
            for e in bits(self.full & ~covered):
                u, v = self.edges[e]
                rows[u - 1][v - 1] = rows[v - 1][u - 1] = 1
            rows = [r for r in rows if any(r)]
            need = -(-_mod_rank(rows) // 2)
            self.rank_cache[covered] = need
        return need

    def _key(self, covered: int, depth: int):
        if self.r is not None:
            return (covered, tuple(self.counts))
        if self.cap is not None:
            return (covered, tuple(depth - c for c in self.counts))
        return covered

    def run(self, forced: int | None = None) -> bool:
        if forced is not None:
            em, vm, _, _ = self.cands[forced]
            self._push(forced)
            ok = self._dfs(em, 1)
            if not ok:
                self._pop(forced)
            return ok
        return self._dfs(0, 0)

    def _push(self, ci: int) -> None:
        self.chosen.append(ci)
        for v in self.cand_verts[ci]:
            self.counts[v] += 1

    def _pop(self, ci: int) -> None:
        self.chosen.pop()
        for v in self.cand_verts[ci]:
            self.counts[v] -= 1

    def root_choices(self) -> list[int]:
        return self._branch(0, 0) or []

    def _branch(self, covered: int, depth: int) -> list[int] | None:
        """Usable candidates for the most constrained uncovered edge; None if stuck."""
        blocked = 0
        required = 0
        if self.r is not None:
            for v, c in enumerate(self.counts):
                if c >= self.r:
                    blocked |= 1 << v
        if self.cap is not None:
            for v, c in enumerate(self.counts):
                if depth - c >= self.cap:
                    required |= 1 << v
        partition = self.mode == PARTITION
        cands = self.cands
        best: list[int] | None = None
        for e in bits(self.full & ~covered):
            usable = [
                ci for ci in self.edge_cands[e]
                if not (partition and cands[ci][0] & covered)
                and not cands[ci][1] & blocked
                and not required & ~cands[ci][1]
            ]
            if not usable:
                return None
            if best is None or len(usable) < len(best):
                best = usable
                if len(best) == 1:
                    break
        return best

    def _dfs(self, covered: int, depth: int) -> bool:
        if covered == self.full:
            return True
        self.nodes += 1
        if self.deadline is not None and self.nodes & 255 == 0 and time.monotonic() > self.deadline:
            raise SearchTimeout
        rem = math.inf if self.k is None else self.k - depth
        if rem <= 0:
            return False
        key = self._key(covered, depth)
        if self.failed.get(key, -1) >= rem:
            return False
        if self.k is not None:
            left = (self.full & ~covered).bit_count()
            if left > rem * self.maxsize:
                self.failed[key] = rem
                return False
            if self.mode == PARTITION and self._residual_need(covered) > rem:
                self.failed[key] = rem
                return False
        choices = self._branch(covered, depth)
        if choices is not None:
            for ci in choices:
                self._push(ci)
                if self._dfs(covered | self.cands[ci][0], depth + 1):
                    return True
                self._pop(ci)
        self.failed[key] = rem
        return False

    def witness(self, mode: str) -> BicliqueCertificate:
        return BicliqueCertificate(
            tuple(Biclique(_mask_set(self.cands[ci][2]), _mask_set(self.cands[ci][3]))
                  for ci in self.chosen),
            mode,
        )


def _pool(g: Graph, mode: str, budget: SearchBudget) -> list[tuple[int, int]]:
    maximal = mode == COVER and budget.r is None
    return enumerate_biclique_masks(g, maximal_only=maximal)


def _subtree(args) -> tuple[str, BicliqueCertificate | None, int]:
    g, mode, budget, deadline, forced = args
    s = _Search(g, mode, budget, _pool(g, mode, budget), deadline)
    try:
        ok = s.run(forced)
    except SearchTimeout:
        return "timeout", None, s.nodes
    return ("feasible", s.witness(mode), s.nodes) if ok else ("infeasible", None, s.nodes)


def feasible(g: Graph, mode: str, budget: SearchBudget, workers: int = 1) -> Feasibility:
    """Decide whether ``g`` has a cover/partition within ``budget``.

    Exhaustive: ``infeasible`` is a certificate of non-existence.  With
    ``workers > 1`` the root branches run in separate processes; the answer
    does not depend on scheduling and the witness is the one from the first
    feasible root branch in candidate order.
    """
    if mode not in (COVER, PARTITION):
        raise ValueError(f"unknown mode {mode!r}")
    deadline = None if budget.time_limit is None else time.monotonic() + budget.time_limit
    if g.m == 0:
        return Feasibility("feasible", BicliqueCertificate((), mode))
    if workers <= 1:
        status, wit, nodes = _subtree((g, mode, budget, deadline, None))
        return Feasibility(status, wit, nodes)

    root = _Search(g, mode, budget, _pool(g, mode, budget), deadline)
    if budget.k is not None and budget.k <= 0:
        return Feasibility("infeasible")
    choices = root.root_choices()
    timed_out = False
    total = 0
    with ProcessPoolExecutor(max_workers=workers) as ex:
        futures = [ex.submit(_subtree, (g, mode, budget, deadline, ci)) for ci in choices]
        for fut in futures:
            status, wit, nodes = fut.result()
            total += nodes
            if status == "feasible":
                for f in futures:
                    f.cancel()
                return Feasibility("feasible", wit, total)
            timed_out |= status == "timeout"
    return Feasibility("timeout" if timed_out else "infeasible", None, total)


# --- bounds ----------------------------------------------------------------

def clique_number(g: Graph) -> int:
    return len(max_clique(g.adjacency_masks)) if g.n else 0


def _components(g: Graph) -> list[set[int]]:
    seen: set[int] = set()
    out = []
    for s in g.vertices:
        if s in seen:
            continue
        comp, stack = {s}, [s]
        while stack:
            for w in g.neighbors(stack.pop()):
                if w not in comp:
                    comp.add(w)
                    stack.append(w)
        seen |= comp
        out.append(comp)
    return out


def _is_biclique_component(g: Graph, comp: set[int]) -> bool:
    # a connected graph is one biclique iff it is complete bipartite
    start = min(comp)
    side = {start: 0}
    stack = [start]
    while stack:
        u = stack.pop()
        for w in g.neighbors(u):
            if w not in side:
                side[w] = 1 - side[u]
                stack.append(w)
            elif side[w] == side[u]:
                return False
    a = [v for v in comp if side[v] == 0]
    b = [v for v in comp if side[v] == 1]
    return sum(g.degree(v) for v in a) == len(a) * len(b)


def max_biclique_edges(g: Graph) -> int:
    return max((len(a) * len(b) for a, b in
                ((_mask_set(x), _mask_set(y)) for x, y in enumerate_biclique_masks(g, True))),
               default=0)


def lower_bounds(g: Graph, measure: str, si_edge_cap: int = 80,
                 enum_vertex_cap: int = 20) -> BoundReport:
    """Certified lower bound for ``measure`` with the argument that gives it.

    Tags: ``rank`` (bp >= rank/2), ``strongly-independent`` (no biclique holds
    two strongly independent edges), ``log-clique`` (an induced K_w needs
    ceil(log w) bicliques at some vertex and in total), ``edge-count``
    (|E| over the largest biclique), ``component`` (a 1-local cover is a
    disjoint union of bicliques), ``trivial``.
    """
    from .reductions import max_strongly_independent_set

    if measure not in MEASURES:
        raise ValueError(f"unknown measure {measure!r}")
    if g.m == 0 or measure == "tau":
        return BoundReport(measure, 0, "trivial")
    found: list[tuple[int, str]] = []
    if measure == "bp":
        found.append((bp_rank_lower_bound(g), "rank"))
    if measure in ("bc", "bp") and g.m <= si_edge_cap:
        found.append((len(max_strongly_independent_set(g)), "strongly-independent"))
    found.append((ceil_log2(clique_number(g)), "log-clique"))
    if measure in ("bc", "bp") and g.n <= enum_vertex_cap:
        found.append((-(-g.m // max_biclique_edges(g)), "edge-count"))
    if measure in ("lbc", "lbp"):
        if any(len(c) > 1 and not _is_biclique_component(g, c) for c in _components(g)):
            found.append((2, "component"))
    found.append((1, "trivial"))
    value, reason = max(found, key=lambda vr: vr[0])  # first of the maxima wins
    return BoundReport(measure, value, reason)


# --- warm starts -----------------------------------------------------------

def greedy_cover(g: Graph) -> BicliqueCertificate:
    """Repeatedly take the maximal biclique covering the most uncovered edges."""
    pool = enumerate_bicliques(g, maximal_only=True)
    uncovered = set(g.edges)
    out = []
    while uncovered:
        b = max(pool, key=lambda b: sum(e in uncovered for e in b.edges()))
        out.append(b)
        uncovered -= set(b.edges())
    return BicliqueCertificate(tuple(out), COVER)


def greedy_partition(g: Graph) -> BicliqueCertificate:
    """Repeatedly take a largest biclique of the not-yet-covered edges."""
    out = []
    left = set(g.edges)
    while left:
        rest = Graph(g.n, frozenset(left))
        b = max(enumerate_bicliques(rest, maximal_only=True), key=lambda b: b.size)
        out.append(b)
        left -= set(b.edges())
    return BicliqueCertificate(tuple(out), PARTITION)


def miss_count(cert: BicliqueCertificate, n: int) -> int:
    """Largest number of certificate bicliques avoiding a single vertex."""
    prof = locality(cert, n)
    return max((len(cert) - c for c in prof.counts.values()), default=0)


def _score(measure: str, cert: BicliqueCertificate, n: int) -> int:
    if measure in ("bc", "bp"):
        return len(cert)
    if measure in ("lbc", "lbp"):
        return locality(cert).max
    return miss_count(cert, n)


def _budget(measure: str, value: int, time_limit: float | None) -> SearchBudget:
    if measure in ("bc", "bp"):
        return SearchBudget(k=value, time_limit=time_limit)
    if measure in ("lbc", "lbp"):
        return SearchBudget(r=value, time_limit=time_limit)
    return SearchBudget(misses=value, time_limit=time_limit)


def solve(g: Graph, measure: str, time_limit: float | None = None,
          workers: int = 1) -> SolveResult:
    """Exact value of ``measure`` with a verifying witness.

    Starts at the certified lower bound and tests feasibility upward until
    the greedy upper bound.  On timeout the result is marked incomplete and
    carries the bracket proven so far.
    """
    report = lower_bounds(g, measure)
    mode = PARTITION if measure in ("bp", "lbp") else COVER
    if g.m == 0:
        empty = BicliqueCertificate((), mode)
        report.upper, report.witness = 0, empty
        return SolveResult(measure, 0, empty, report, True, (0, 0))
    start = time.monotonic()
    best = greedy_partition(g) if mode == PARTITION else greedy_cover(g)
    upper = _score(measure, best, g.n)
    lower = report.lower
    for value in range(lower, upper):
        remaining = None
        if time_limit is not None:
            remaining = max(0.0, time_limit - (time.monotonic() - start))
        res = feasible(g, mode, _budget(measure, value, remaining), workers)
        if res.status == "timeout":
            report.upper, report.witness = upper, best
            return SolveResult(measure, None, best, report, False, (value, upper))
        if res:
            best, upper = res.witness, value
            break
        lower = value + 1
    assert verify(g, best), "solver produced an invalid witness"
    report.upper, report.witness = upper, best
    return SolveResult(measure, upper, best, report, True, (upper, upper))
