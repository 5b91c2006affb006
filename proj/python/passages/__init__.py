"""Passage decomposition of directed graphs.

A passage is a set of edges closed under shared tails and shared heads: if
an edge is in, every graph edge leaving the same tail or entering the same
head is in too. This package wraps the C++ core; edges travel as
``(tail, head)`` name tuples and exact ratios come back as
:class:`fractions.Fraction`.
"""

from passages._core import (
    ApproxSolution,
    Graph,
    Passage,
    PassageCount,
    PassageGraph,
    PassagePartitioning,
    WeightedGraph,
    accuracy,
    average_size,
    bell_number,
    biggest_size,
    boundary,
    build_passage_graph,
    classify_vertices,
    closure,
    count_passages,
    decompose,
    difference_of,
    disjoint,
    edge_probability,
    enumerate_partitionings,
    enumerate_passages,
    feeds,
    initial_vertices,
    intersection_of,
    is_passage,
    make_passage,
    minimal_passage_of,
    minimal_passages,
    optimize,
    parse_graph,
    parse_weighted_graph,
    same_passage,
    serialize_graph,
    terminal_vertices,
    to_dot,
    union_of,
    validate_partitioning,
)
from passages._core import __version__

__all__ = [
    "ApproxSolution",
    "Graph",
    "Passage",
    "PassageCount",
    "PassageGraph",
    "PassagePartitioning",
    "WeightedGraph",
    "accuracy",
    "average_size",
    "bell_number",
    "biggest_size",
    "boundary",
    "build_passage_graph",
    "classify_vertices",
    "closure",
    "count_passages",
    "decompose",
    "difference_of",
    "disjoint",
    "edge_probability",
    "enumerate_partitionings",
    "enumerate_passages",
    "feeds",
    "initial_vertices",
    "intersection_of",
    "is_passage",
    "make_passage",
    "minimal_passage_of",
    "minimal_passages",
    "optimize",
    "parse_graph",
    "parse_weighted_graph",
    "same_passage",
    "serialize_graph",
    "terminal_vertices",
    "to_dot",
    "union_of",
    "validate_partitioning",
    "__version__",
]
