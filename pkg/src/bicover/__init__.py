"""Exact biclique cover and partition numbers, their local variants, and
subcube intersection representations of small graphs."""

from .graph import (
    COVER,
    PARTITION,
    Biclique,
    BicliqueCertificate,
    Graph,
    LocalityProfile,
    StructureError,
    Verdict,
    complement,
    identify_vertices,
    induced_subgraph,
    locality,
    verify,
)
from .linalg import RationalMatrix, adjacency_matrix, bp_rank_lower_bound, rank_exact
from .solver import SearchBudget, enumerate_bicliques, feasible, lower_bounds, solve
from .subcube import Subcube, SubcubeFamily, intersection_graph, rho, tau

__version__ = "0.1.0"
