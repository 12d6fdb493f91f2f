from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

import oracle
from conftest import graphs
from bicover.families import complete_graph, ternary_graph
from bicover.graph import empty_graph
from bicover.linalg import (
    RationalMatrix,
    adjacency_matrix,
    bareiss_rank,
    bp_rank_lower_bound,
    rank_exact,
)
from bicover.solver import solve


def _rows(m):
    return [[m[i, j] for j in range(m.cols)] for i in range(m.rows)]


def test_adjacency_examples():
    assert _rows(adjacency_matrix(complete_graph(2))) == [[0, 1], [1, 0]]
    assert _rows(adjacency_matrix(empty_graph(3))) == [[0] * 3] * 3
    assert _rows(adjacency_matrix(ternary_graph(1))) == [[0, 1, 0], [1, 0, 0], [0, 0, 0]]


def test_matrix_needs_positive_dimensions():
    with pytest.raises(ValueError):
        RationalMatrix.from_rows([])
    with pytest.raises(ValueError):
        adjacency_matrix(empty_graph(0))


def test_entries_are_fractions():
    m = RationalMatrix.from_rows([[Fraction(2, 4), 1]])
    assert m[0, 0] == Fraction(1, 2) and isinstance(m[0, 1], Fraction)


def test_rank_examples():
    assert rank_exact(RationalMatrix.identity(4)) == 4
    assert rank_exact(adjacency_matrix(ternary_graph(2))) == 8
    assert rank_exact(adjacency_matrix(complete_graph(4))) == 4


def test_rank_bound_examples():
    assert bp_rank_lower_bound(ternary_graph(3)) == 13
    assert bp_rank_lower_bound(empty_graph(3)) == 0
    assert bp_rank_lower_bound(complete_graph(4)) == 2


@pytest.mark.parametrize("m", [1, 2, 3, 4])
def test_ternary_rank(m):
    assert rank_exact(adjacency_matrix(ternary_graph(m))) == 3 ** m - 1


def test_bareiss_hand_example():
    assert bareiss_rank([[2, 4, 6], [1, 2, 3], [0, 1, 1]]) == 2
    assert bareiss_rank([[0, 0], [0, 0]]) == 0


rational = st.fractions(min_value=-5, max_value=5, max_denominator=6)


@settings(max_examples=150, deadline=None)
@given(st.integers(1, 5).flatmap(lambda r: st.integers(1, 5).flatmap(
    lambda c: st.lists(st.lists(rational, min_size=c, max_size=c), min_size=r, max_size=r))))
def test_rank_matches_gauss_jordan_and_transpose(rows):
    m = RationalMatrix.from_rows(rows)
    r = rank_exact(m)
    assert r == oracle.rank_fraction(rows)
    assert r == rank_exact(m.transpose())


def test_rank_matches_sympy():
    sympy = pytest.importorskip("sympy")
    for m in (1, 2, 3):
        rows = _rows(adjacency_matrix(ternary_graph(m)))
        assert rank_exact(adjacency_matrix(ternary_graph(m))) == sympy.Matrix(rows).rank()


@settings(max_examples=60, deadline=None)
@given(graphs(min_n=1, max_n=5))
def test_rank_bound_below_bp(g):
    lb = bp_rank_lower_bound(g)
    assert 0 <= lb <= g.n
    assert lb <= solve(g, "bp").value
