import pytest

from bicover.families import (
    FAMILIES,
    binary_cover,
    ceil_log2,
    codim2_graph,
    codim2_words,
    complete_graph,
    counterexample_graph,
    covering_bicliques,
    crown_graph,
    crown_log_partition,
    cube_c4_partition,
    cube_star_partition,
    hypercube,
    prefix_partition,
    recursive_partition,
    star_cover,
    star_partition,
    ternary_graph,
    two_local_partition,
)
from bicover.graph import Biclique, locality, verify
from bicover.reductions import shared_edge_table
from bicover.solver import solve


def B(a, b):
    return Biclique(frozenset(a), frozenset(b))


def test_ceil_log2():
    assert [ceil_log2(n) for n in range(1, 10)] == [0, 1, 2, 2, 3, 3, 3, 3, 4]
    with pytest.raises(ValueError):
        ceil_log2(0)


def test_complete_examples():
    g = complete_graph(4)
    assert len(star_partition(4)) == 3 and verify(g, star_partition(4))
    c = binary_cover(8)
    assert len(c) == 3 and locality(c).max == 3 and verify(complete_graph(8), c)
    p = prefix_partition(4)
    assert list(p) == [B({1, 2}, {3, 4}), B({1}, {2}), B({3}, {4})]
    assert verify(g, p) and locality(p).max == 2


def test_k1_has_empty_certificates():
    g = complete_graph(1)
    for make in (star_partition, binary_cover, prefix_partition):
        assert len(make(1)) == 0 and verify(g, make(1))


@pytest.mark.parametrize("n", range(2, 17))
def test_complete_certificates_sizes(n):
    g = complete_graph(n)
    assert verify(g, star_partition(n)) and len(star_partition(n)) == n - 1
    assert verify(g, binary_cover(n)) and len(binary_cover(n)) == ceil_log2(n)
    p = prefix_partition(n)
    assert verify(g, p) and locality(p).max == ceil_log2(n)


def test_crown_examples():
    g = crown_graph(2)
    assert g.m == 2
    p = crown_log_partition(2)
    assert len(p) == 2 and locality(p).max == 1 and verify(g, p)
    g = crown_graph(4)
    p = crown_log_partition(4)
    assert g.m == 12 and verify(g, p) and locality(p).max == 2
    # bit-by-prefix refinement: 2(t - 1) bicliques; a 4-biclique partition exists
    assert len(p) == 6
    assert solve(g, "bp").value == 4


@pytest.mark.parametrize("t", range(2, 33))
def test_crown_log_partition(t):
    p = crown_log_partition(t)
    assert verify(crown_graph(t), p)
    assert locality(p).max <= ceil_log2(t)


def test_hypercube_examples():
    c4 = cube_c4_partition(2)
    assert hypercube(2).m == 4 and len(c4) == 1 and locality(c4).max == 1
    assert verify(hypercube(2), c4)
    p = cube_c4_partition(4)
    assert len(p) == 8 and locality(p).max == 2 and verify(hypercube(4), p)
    s = cube_star_partition(3)
    assert len(s) == 4 and verify(hypercube(3), s)
    with pytest.raises(ValueError):
        cube_c4_partition(3)


@pytest.mark.parametrize("d", [1, 2, 3, 4, 5, 6])
def test_hypercube_stars(d):
    s = cube_star_partition(d)
    assert len(s) == 2 ** (d - 1) and verify(hypercube(d), s)


def test_ternary_examples():
    assert list(recursive_partition(1)) == [B({1}, {2})]
    assert len(recursive_partition(2)) == 4 and verify(ternary_graph(2), recursive_partition(2))
    assert len(recursive_partition(3)) == 13


@pytest.mark.parametrize("m", range(1, 7))
def test_recursive_partition_size(m):
    p = recursive_partition(m)
    assert len(p) == (3 ** m - 1) // 2
    if m <= 5:
        assert verify(ternary_graph(m), p)


def test_codim2_examples():
    g = codim2_graph(2)
    assert g == complete_graph(4)
    assert len(covering_bicliques(2)) == 2 and locality(covering_bicliques(2)).max == 2
    assert codim2_graph(3).n == 12
    assert verify(codim2_graph(4), covering_bicliques(4))
    assert locality(covering_bicliques(4)).max == 2


@pytest.mark.parametrize("m", range(2, 11))
def test_codim2_cover_and_shared_edges(m):
    g, c = codim2_graph(m), covering_bicliques(m)
    assert verify(g, c) and locality(c).max == 2 and len(c) == m
    shared = [e for e, idx in shared_edge_table(g, c).items() if len(idx) == 2]
    assert len(shared) == m * (m - 1)
    assert all(w.count("*") == m - 2 for w in codim2_words(m))


def test_counterexample_examples():
    g = counterexample_graph(4)
    assert g.n == 11 and g.m == 16
    p = two_local_partition(4)
    assert len(p) == 5 and locality(p).max == 2 and verify(g, p)
    s = star_cover(4)
    assert len(s) == 4 and verify(g, s)
    assert locality(s, g.n).counts[g.n] == 4


def test_registry_certificates_verify():
    params = {"complete": 6, "crown": 5, "hypercube": 4, "ternary": 2,
              "codim2": 4, "counterexample": 5}
    for name, (make, certs) in FAMILIES.items():
        g = make(params[name])
        for cname, cmake in certs.items():
            assert verify(g, cmake(params[name])), (name, cname)
