"""Brute-force oracles and reproducible instance generators.

Nothing here shares code with the frontier-register engine or the
index-following cover; the point is to give differential tests something
independent to disagree with.  Generators draw from Python's stdlib
random.Random (Mersenne Twister), so a given seed reproduces an instance
byte for byte.
"""

from __future__ import annotations

import random
from collections import deque
from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations
from typing import Iterator

from .decomposition import Walk, WalkDecomposition
from .graph import Digraph, Edge


@dataclass(frozen=True)
class InstanceSeed:
    n: int
    k: int
    max_len: int
    seed: int

    def __post_init__(self) -> None:
        if self.n < 1:
            raise ValueError("n must be at least 1")
        if self.k < 0:
            raise ValueError("k must be nonnegative")
        if self.max_len < 1:
            raise ValueError("max_len must be at least 1")


def reachable_set(g: Digraph, s: int) -> set[int]:
    """All vertices reachable from s, including s itself (plain BFS)."""
    g._check_vertex(s)
    seen = {s}
    queue = deque([s])
    while queue:
        u = queue.popleft()
        for v in g.successors(u):
            if v not in seen:
                seen.add(v)
                queue.append(v)
    return seen


def oracle_reachable(g: Digraph, s: int, t: int) -> bool:
    g._check_vertex(t)
    return t in reachable_set(g, s)


def switch_costs(w: WalkDecomposition, s: int, n: int | None = None) -> list[int | None]:
    """Minimum switch count from s to every vertex, None where unreachable.

    Runs a 0/1 shortest-path search on the occurrence graph: nodes are
    (walk, position) pairs, advancing one position inside a walk is free,
    and hopping between two occurrences of the same vertex (possibly in
    the same walk) costs one switch.  Entry at any occurrence of s is
    free, and s costs 0 even when it occurs nowhere.
    """
    nv = w.implied_vertex_count
    universe = nv if n is None else n
    if universe < nv:
        raise ValueError(f"universe {universe} smaller than implied vertex count {nv}")
    if not (0 <= s < universe):
        raise ValueError(f"source {s} outside [0, {universe})")

    occ: dict[int, list[tuple[int, int]]] = {}
    for i, walk in enumerate(w):
        for p, v in enumerate(walk.vertices):
            occ.setdefault(v, []).append((i, p))

    dist = [[None] * len(walk) for walk in w]
    queue: deque[tuple[int, int, int]] = deque()
    for i, p in occ.get(s, []):
        dist[i][p] = 0
        queue.append((0, i, p))
    while queue:
        cost, i, p = queue.popleft()
        if dist[i][p] != cost:
            continue
        nxt = p + 1
        if nxt < len(w[i]) and (dist[i][nxt] is None or dist[i][nxt] > cost):
            dist[i][nxt] = cost
            queue.appendleft((cost, i, nxt))
        for j, q in occ[w[i][p]]:
            if (j, q) != (i, p) and (dist[j][q] is None or dist[j][q] > cost + 1):
                dist[j][q] = cost + 1
                queue.append((cost + 1, j, q))

    best: list[int | None] = [None] * universe
    for i, walk in enumerate(w):
        row = dist[i]
        for p, v in enumerate(walk.vertices):
            c = row[p]
            if c is not None and (best[v] is None or c < best[v]):
                best[v] = c
    best[s] = 0
    return best


def oracle_min_switches(
    w: WalkDecomposition, s: int, t: int, n: int | None = None
) -> int | None:
    nv = w.implied_vertex_count
    universe = nv if n is None else n
    if not (0 <= t < universe):
        raise ValueError(f"target {t} outside [0, {universe})")
    if s == t:
        if not (0 <= s < universe):
            raise ValueError(f"source {s} outside [0, {universe})")
        return 0
    return switch_costs(w, s, n=universe)[t]


def gen_decomposed_instance(spec: InstanceSeed) -> WalkDecomposition:
    """k random walks over vertex ids below n, each of length <= max_len.

    Steps that would form a loop are redrawn rather than rejected, so with
    n = 1 every walk degenerates to a single vertex.  Deterministic in the
    seed.
    """
    rng = random.Random(spec.seed)
    walks = []
    for _ in range(spec.k):
        length = rng.randint(1, spec.max_len)
        seq = [rng.randrange(spec.n)]
        if spec.n > 1:
            while len(seq) < length:
                nxt = rng.randrange(spec.n)
                while nxt == seq[-1]:
                    nxt = rng.randrange(spec.n)
                seq.append(nxt)
        walks.append(Walk(seq))
    return WalkDecomposition(walks)


def gen_random_dag(n: int, p: float, seed: int) -> Digraph:
    """Random DAG: each pair (i, j) with i < j becomes an edge with
    probability p, so the result is acyclic by construction."""
    if not 0.0 <= p <= 1.0:
        raise ValueError(f"edge probability {p} outside [0, 1]")
    rng = random.Random(seed)
    edges = [(i, j) for i in range(n) for j in range(i + 1, n) if rng.random() < p]
    return Digraph(n, edges)


def switch_chain(n: int, k: int) -> WalkDecomposition:
    """Worst-case instance: the chain 0 -> 1 -> ... -> n-1 split round-robin
    into k walks, each listing its chain segments in reverse order.

    Following the chain then needs a switch per edge (the continuation
    always sits earlier in its walk, or in another walk), so the query
    0 -> n-1 costs n-2 switches and drives the engine through about n
    rounds.  The filler steps between reversed segments only add edges
    that point backwards along the chain, which cannot shorten a forward
    route.
    """
    if n < 2:
        raise ValueError("need at least 2 vertices")
    if not (1 <= k <= n - 1):
        raise ValueError(f"k must be in [1, {n - 1}]")
    buckets: list[list[int]] = [[] for _ in range(k)]
    for i in range(n - 1):
        buckets[i % k].append(i)
    walks = []
    for segs in buckets:
        seq: list[int] = []
        for a in reversed(segs):
            seq.extend((a, a + 1))
        walks.append(Walk(seq))
    return WalkDecomposition(walks)


def switch_ring(k: int) -> WalkDecomposition:
    """k walks on vertices 0..k+1 whose only 0 -> k+1 route costs exactly
    k switches: walk 0 holds the last chain segment followed by the first,
    walks 1..k-1 hold one middle segment each."""
    if k < 1:
        raise ValueError("need at least 1 walk")
    walks = [Walk([k, k + 1, 0, 1])]
    for i in range(1, k):
        walks.append(Walk([i, i + 1]))
    return WalkDecomposition(walks)


def _extensions(edges: frozenset[Edge], at: int, blocked: frozenset[int],
                forward: bool) -> Iterator[tuple[Edge, ...]]:
    # All simple chains growing from `at`, shortest first, avoiding blocked
    # vertices; () is always yielded.
    yield ()
    for a, b in edges:
        if forward and a == at and b not in blocked:
            for rest in _extensions(edges, b, blocked | {b}, forward):
                yield ((a, b),) + rest
        elif not forward and b == at and a not in blocked:
            for rest in _extensions(edges, a, blocked | {a}, forward):
                yield ((a, b),) + rest


@lru_cache(maxsize=None)
def _min_paths_covering(edges: frozenset[Edge]) -> int:
    if not edges:
        return 0
    e = min(edges)
    u, v = e
    rest = edges - {e}
    best = None
    for back in _extensions(rest, u, frozenset((u, v)), forward=False):
        back_vertices = frozenset(x for edge in back for x in edge)
        for fwd in _extensions(rest - set(back), v,
                               frozenset((u, v)) | back_vertices, forward=True):
            used = frozenset(back) | {e} | frozenset(fwd)
            count = 1 + _min_paths_covering(edges - used)
            if best is None or count < best:
                best = count
    assert best is not None
    return best


def brute_force_path_number(g: Digraph) -> int:
    """Exhaustive minimum number of edge-disjoint simple paths covering all
    edges of g.  Exponential; intended for graphs with a handful of edges."""
    return _min_paths_covering(frozenset(g.edges))


def iter_small_dags(n: int) -> Iterator[Digraph]:
    """Every DAG on vertices 0..n-1 whose edges respect the natural order.

    Any labeled DAG is a relabeling of exactly one of these, which is
    enough for exhaustive checks of label-independent quantities.
    """
    pairs = list(combinations(range(n), 2))
    for bits in range(1 << len(pairs)):
        yield Digraph(n, [pairs[b] for b in range(len(pairs)) if bits >> b & 1])
