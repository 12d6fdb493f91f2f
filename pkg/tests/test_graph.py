import itertools

import pytest
from hypothesis import given, settings

import oracle
from conftest import cycle, graphs, path
from bicover.families import binary_cover, complete_graph, crown_graph, star_partition, ternary_graph
from bicover.graph import (
    COVER,
    PARTITION,
    Biclique,
    BicliqueCertificate,
    Graph,
    StructureError,
    complement,
    cover,
    edge,
    empty_graph,
    identify_vertices,
    induced_subgraph,
    locality,
    partition,
    relabel_graph,
    star,
    verify,
)
from bicover.solver import enumerate_bicliques


def B(a, b):
    return Biclique(frozenset(a), frozenset(b))


def test_graph_rejects_loops_and_out_of_range():
    with pytest.raises(ValueError):
        Graph(3, frozenset({(1, 1)}))
    with pytest.raises(ValueError):
        Graph(3, frozenset({(1, 4)}))


def test_edges_are_normalised():
    g = Graph(3, frozenset({(2, 1), (3, 2)}))
    assert g.sorted_edges == ((1, 2), (2, 3))
    assert g.has_edge(2, 1) and not g.has_edge(1, 3)
    assert edge(5, 2) == (2, 5)


def test_biclique_shape():
    b = B({1, 2}, {3, 4})
    assert b.size == 4 and b.shape == (2, 2)
    assert set(b.edges()) == {(1, 3), (1, 4), (2, 3), (2, 4)}


def test_verify_k22_single_biclique(k22):
    assert verify(k22, partition([B({1, 2}, {3, 4})]))


def test_verify_k3_star_partition():
    assert verify(complete_graph(3), partition([B({1}, {2, 3}), B({2}, {3})]))


def test_verify_k3_double_coverage():
    v = verify(complete_graph(3), partition([B({1}, {2, 3}), B({2}, {1, 3})]))
    assert not v
    assert "{1,2}" in v.reason


def test_verify_reports_non_edge_and_uncovered():
    g = path(3)
    v = verify(g, cover([B({1}, {3})]))
    assert not v and "not an edge" in v.reason
    v = verify(g, cover([B({1}, {2})]))
    assert not v and "not covered" in v.reason


def test_verify_structural_error():
    with pytest.raises(StructureError):
        verify(path(3), cover([B({1}, {7})]))


def test_empty_graph_certificates():
    g = empty_graph(3)
    assert verify(g, cover([])) and verify(g, partition([]))
    assert locality(cover([]), 3).max == 0


def test_locality_examples():
    assert locality(partition([B({1, 2}, {3, 4})])).max == 1
    assert locality(binary_cover(4)).max == 2
    prof = locality(star_partition(4), 4)
    assert prof.counts[4] == 3 and prof.max == 3
    prof = locality(partition([B({1}, {2})]), 4)
    assert prof.counts[3] == 0


def test_complement_examples():
    assert complement(complete_graph(3)) == empty_graph(3)
    p3 = path(3)
    assert complement(complement(p3)) == p3
    c5 = cycle(5)
    iso = {1: 1, 2: 3, 3: 5, 4: 2, 5: 4}
    assert relabel_graph(complement(c5), iso) == c5


def test_induced_subgraph_examples():
    assert induced_subgraph(complete_graph(4), {1, 2, 3}) == complete_graph(3)
    assert induced_subgraph(cycle(5), {1, 2, 3}) == path(3)
    g = ternary_graph(2)
    binary = [v for v in g.vertices if "*" not in g.label(v)]
    assert induced_subgraph(g, binary) == complete_graph(4)


def test_identify_vertices_examples():
    assert identify_vertices(crown_graph(2), [(1, 3), (2, 4)]) == complete_graph(2)
    assert identify_vertices(crown_graph(3), [(1, 4), (2, 5), (3, 6)]) == complete_graph(3)
    assert identify_vertices(path(3), [(1, 3)]) == complete_graph(2)


def test_identify_drops_loops_and_rejects_overlap():
    assert identify_vertices(path(3), [(1, 2)]) == complete_graph(2)
    with pytest.raises(ValueError):
        identify_vertices(path(4), [(1, 2), (2, 3)])


def test_verify_flags_bad_bicliques():
    g = complete_graph(3)
    assert not verify(g, cover([B({1, 2}, {2, 3})]))
    assert not verify(g, cover([B(set(), {1})]))


def _recount(g, cert):
    """Independent multiplicity check of a certificate."""
    edges = set(g.edges)
    pairs = [(b.class0, b.class1) for b in cert]
    count = oracle.multiplicity(edges, pairs)
    if any(e not in edges for e in count):
        return False
    want = (lambda c: c == 1) if cert.mode == PARTITION else (lambda c: c >= 1)
    return all(want(count[e]) for e in edges)


@settings(max_examples=150, deadline=None)
@given(graphs(max_n=5), graphs(max_n=5))
def test_verify_matches_recount(g, h):
    # certificates drawn from the bicliques of h, judged against g
    if h.n > g.n or h.m == 0:
        return
    bs = enumerate_bicliques(h)[:4]
    for mode in (COVER, PARTITION):
        cert = BicliqueCertificate(tuple(bs), mode)
        assert bool(verify(g, cert)) == _recount(g, cert)


@settings(max_examples=100, deadline=None)
@given(graphs(max_n=5))
def test_partition_valid_implies_cover_valid(g):
    bs = enumerate_bicliques(g)
    for k in range(min(3, len(bs)) + 1):
        for sub in itertools.combinations(bs[:6], k):
            p = partition(sub)
            if verify(g, p):
                assert verify(g, p.as_mode(COVER))
            assert locality(p, g.n).max <= len(p)
            assert verify(g, p) == verify(g, p)


def test_star_helper():
    assert star(1, [2, 3]) == B({1}, {2, 3})
