"""Minimal edge-disjoint path covers of DAGs via per-vertex edge indexing.

Every vertex numbers its incoming edges 1..indeg and its outgoing edges
1..outdeg.  A trace starts on an outgoing edge whose number exceeds the
start vertex's indegree and, after entering a vertex through edge number
i, continues along the outgoing edge numbered i when it exists.  Distinct
start edges yield edge-disjoint simple paths, and the family of all
traces covers every edge with exactly as many paths as the degree
imbalance lower bound, so the cover is minimal.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property

from .decomposition import Walk, WalkDecomposition
from .graph import Digraph, Edge, is_acyclic
from .reach import RegisterMeter


class CyclicGraphError(ValueError):
    """The input graph contains a directed cycle."""


# Scalar locals of a trace: current vertex, carried edge number, next target,
# and the emitted length used as the cycle guard.
_TRACE_SCRATCH_WORDS = 4


@dataclass(frozen=True)
class EdgeIndexing:
    """Edge numbering: in_index[(u, v)] in 1..indeg(v), out_index in 1..outdeg(u).

    Per vertex, the numbers over its incoming (outgoing) edges form a
    permutation of 1..degree.
    """

    in_index: dict[Edge, int]
    out_index: dict[Edge, int]

    @cached_property
    def _target_by_rank(self) -> dict[tuple[int, int], int]:
        # (u, out number) -> v, for following the numbering during a trace
        return {(u, r): v for (u, v), r in self.out_index.items()}


def assign_edge_indices(g: Digraph) -> EdgeIndexing:
    """Deterministic numbering: incoming edges of v by ascending source id,
    outgoing edges of u by ascending target id."""
    in_index: dict[Edge, int] = {}
    out_index: dict[Edge, int] = {}
    for v in range(g.n):
        for r, u in enumerate(g.predecessors(v), start=1):
            in_index[(u, v)] = r
        for r, x in enumerate(g.successors(v), start=1):
            out_index[(v, x)] = r
    return EdgeIndexing(in_index=in_index, out_index=out_index)


def trace_path(
    g: Digraph, idx: EdgeIndexing, start: Edge, meter: RegisterMeter | None = None
) -> Walk:
    """Follow the edge numbering from a legal start edge until it runs out.

    The start edge (v, w) must satisfy out_index > indeg(v).  On an acyclic
    graph the result is a simple path; a revisited vertex certifies a cycle
    and raises CyclicGraphError.
    """
    if start not in g.edges:
        raise ValueError(f"start edge {start} is not in the graph")
    u, v = start
    if idx.out_index[start] <= len(g.predecessors(u)):
        raise ValueError(
            f"edge {start} is not a legal path start: its out number "
            f"{idx.out_index[start]} does not exceed indeg({u})={len(g.predecessors(u))}")
    if meter is not None:
        meter.acquire(_TRACE_SCRATCH_WORDS)
    verts = [u, v]
    cur = v
    carried = idx.in_index[start]
    while True:
        nxt = idx._target_by_rank.get((cur, carried))
        if nxt is None:
            break
        carried = idx.in_index[(cur, nxt)]
        cur = nxt
        verts.append(cur)
        if len(verts) > g.n:
            if meter is not None:
                meter.release(_TRACE_SCRATCH_WORDS)
            raise CyclicGraphError("trace revisits a vertex: the graph is not acyclic")
    if meter is not None:
        meter.release(_TRACE_SCRATCH_WORDS)
    if len(set(verts)) != len(verts):
        raise CyclicGraphError("trace revisits a vertex: the graph is not acyclic")
    return Walk(verts)


def minimal_path_decomposition(
    g: Digraph, meter: RegisterMeter | None = None
) -> WalkDecomposition:
    """Minimal path decomposition of an acyclic g.

    Paths are emitted in ascending order of start vertex and start edge
    number; the result always validates as a path decomposition and its
    size equals path_number_lower_bound(g).
    """
    if not is_acyclic(g):
        raise CyclicGraphError("graph is not acyclic")
    idx = assign_edge_indices(g)
    walks: list[Walk] = []
    for v in range(g.n):
        indeg = len(g.predecessors(v))
        succs = g.successors(v)
        for rank in range(indeg, len(succs)):
            walks.append(trace_path(g, idx, (v, succs[rank]), meter=meter))
    return WalkDecomposition(walks)
