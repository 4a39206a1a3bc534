"""Reachability over walk decompositions and minimal path covers of DAGs.

Given a directed graph together with a family of k walks covering its
edges, reachability queries run with 2k index registers plus a constant
number of scalars of working state, and report the minimum number of
switches between walks along the way.  For acyclic graphs the package
also computes a provably minimal edge-disjoint path cover by numbering
each vertex's incident edges and following the numbers.
"""

from .dagcover import (
    CyclicGraphError,
    EdgeIndexing,
    assign_edge_indices,
    minimal_path_decomposition,
    trace_path,
)
from .decomposition import (
    DecompositionFormatError,
    ValidationReport,
    Violation,
    ViolationKind,
    Walk,
    WalkDecomposition,
    format_decomposition,
    parse_decomposition,
    path_number_lower_bound,
    union_graph,
    validate_path_decomposition,
    validate_walk_decomposition,
)
from .graph import (
    DegreePair,
    Digraph,
    GraphFormatError,
    degrees,
    format_graph,
    is_acyclic,
    parse_graph,
)
from .reach import (
    FrontierRegisters,
    ReachResult,
    RegisterMeter,
    advance_frontier,
    decide_reachability,
    earliest_occurrence,
    initial_frontier,
    occurs_from,
)

__all__ = [
    "CyclicGraphError",
    "DecompositionFormatError",
    "DegreePair",
    "Digraph",
    "EdgeIndexing",
    "FrontierRegisters",
    "GraphFormatError",
    "ReachResult",
    "RegisterMeter",
    "ValidationReport",
    "Violation",
    "ViolationKind",
    "Walk",
    "WalkDecomposition",
    "advance_frontier",
    "assign_edge_indices",
    "decide_reachability",
    "degrees",
    "earliest_occurrence",
    "format_decomposition",
    "format_graph",
    "initial_frontier",
    "is_acyclic",
    "minimal_path_decomposition",
    "occurs_from",
    "parse_decomposition",
    "parse_graph",
    "path_number_lower_bound",
    "trace_path",
    "union_graph",
    "validate_path_decomposition",
    "validate_walk_decomposition",
]

__version__ = "0.1.0"
