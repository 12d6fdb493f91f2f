import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

import oracle
from conftest import cycle, graphs, path
from bicover.families import complete_graph, counterexample_graph, ternary_graph
from bicover.graph import COVER, PARTITION, Biclique, Graph, empty_graph, locality, verify
from bicover.solver import (
    BicliqueOverflow,
    IncompleteResult,
    SearchBudget,
    enumerate_bicliques,
    feasible,
    lower_bounds,
    solve,
)


def _key(b):
    return frozenset((b.class0, b.class1))


def _okey(t):
    return frozenset((t[0], t[1]))


def test_enumerate_examples(k22):
    assert enumerate_bicliques(k22, maximal_only=True) == [
        Biclique(frozenset({1, 2}), frozenset({3, 4}))]
    assert len(enumerate_bicliques(complete_graph(3), maximal_only=True)) == 3
    got = enumerate_bicliques(path(3))
    assert len(got) == 3
    assert Biclique(frozenset({1, 3}), frozenset({2})) in got


def test_enumerate_cap():
    with pytest.raises(BicliqueOverflow):
        enumerate_bicliques(complete_graph(8), cap=100)


@settings(max_examples=120, deadline=None)
@given(graphs(max_n=6))
def test_enumeration_matches_oracle(g):
    assert {_key(b) for b in enumerate_bicliques(g)} == \
        {_okey(t) for t in oracle.all_bicliques(g.n, g.edges)}
    assert {_key(b) for b in enumerate_bicliques(g, maximal_only=True)} == \
        {_okey(t) for t in oracle.maximal_bicliques(g.n, g.edges)}


def test_budget_needs_a_limit():
    with pytest.raises(ValueError):
        SearchBudget()


def test_feasible_examples():
    k4 = complete_graph(4)
    res = feasible(k4, PARTITION, SearchBudget(k=3))
    assert res and verify(k4, res.witness) and len(res.witness) <= 3
    assert feasible(k4, PARTITION, SearchBudget(k=2)).status == "infeasible"
    g = counterexample_graph(4)
    assert feasible(g, COVER, SearchBudget(k=4, r=3)).status == "infeasible"
    assert oracle.cover_exists(g.n, g.edges, 4, 3) is False


def test_solve_examples():
    assert solve(complete_graph(8), "lbp").value == 3
    assert solve(cycle(5), "lbp").value == 2
    assert solve(ternary_graph(2), "bp").value == 4


def test_lower_bound_examples():
    r = lower_bounds(counterexample_graph(4), "bc")
    assert (r.lower, r.lower_reason) == (4, "strongly-independent")
    r = lower_bounds(ternary_graph(3), "bp")
    assert (r.lower, r.lower_reason) == (13, "rank")
    r = lower_bounds(complete_graph(8), "lbc")
    assert (r.lower, r.lower_reason) == (3, "log-clique")


def test_empty_graph_measures():
    for measure in ("bc", "bp", "lbc", "lbp", "tau"):
        res = solve(empty_graph(3), measure)
        assert res.value == 0 and len(res.witness) == 0


def test_timeout_gives_bracket():
    res = solve(ternary_graph(2), "lbp", time_limit=0.0)
    assert not res.complete and res.value is None
    lo, hi = res.bracket
    assert lo <= hi and verify(ternary_graph(2), res.witness)
    with pytest.raises(IncompleteResult):
        res.raise_if_incomplete()


def test_workers_agree():
    g = complete_graph(6)
    for measure in ("bp", "lbc"):
        one = solve(g, measure)
        two = solve(g, measure, workers=2)
        assert one.value == two.value and verify(g, two.witness)


def test_deterministic():
    g = counterexample_graph(4)
    a, b = solve(g, "lbp"), solve(g, "lbp")
    assert a.value == b.value and a.witness == b.witness


@settings(max_examples=60, deadline=None)
@given(graphs(max_n=5))
def test_solver_matches_oracle(g):
    es = set(g.edges)
    bp, lbp = oracle.bp_lbp(g.n, es)
    got = {m: solve(g, m) for m in ("bc", "bp", "lbc", "lbp")}
    assert got["bc"].value == oracle.bc(g.n, es)
    assert got["lbc"].value == oracle.lbc(g.n, es)
    assert (got["bp"].value, got["lbp"].value) == (bp, lbp)
    for m, res in got.items():
        assert verify(g, res.witness)
        assert res.report.lower <= res.value
        if m.startswith("l"):
            assert locality(res.witness, g.n).max == res.value
        else:
            assert len(res.witness) == res.value
    v = {m: r.value for m, r in got.items()}
    assert v["bc"] <= v["bp"] and v["lbc"] <= v["lbp"]
    assert v["lbc"] <= v["bc"] and v["lbp"] <= v["bp"]


@settings(max_examples=40, deadline=None)
@given(graphs(min_n=1, max_n=6), st.integers(1, 4), st.integers(1, 4), st.sampled_from([COVER, PARTITION]))
def test_feasible_monotone(g, k, r, mode):
    res = feasible(g, mode, SearchBudget(k=k, r=r))
    if res:
        assert verify(g, res.witness)
        assert len(res.witness) <= k and locality(res.witness, g.n).max <= r
        assert feasible(g, mode, SearchBudget(k=k + 1, r=r))
        assert feasible(g, mode, SearchBudget(k=k, r=r + 1))
    else:
        assert res.status == "infeasible"


def test_tau_measure_uses_misses():
    # the tau measure is solved on the complement: here P_3 has complement {1,3}
    res = solve(Graph(3, frozenset({(1, 3)})), "tau")
    assert res.value == oracle.tau(3, {(1, 2), (2, 3)}) == 1
