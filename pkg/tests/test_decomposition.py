import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from pathreach.decomposition import (
    DecompositionFormatError,
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
from pathreach.graph import Digraph

from .conftest import overlap_instance


class TestWalk:
    def test_requires_vertices(self):
        with pytest.raises(ValueError):
            Walk([])

    def test_rejects_loop_step(self):
        with pytest.raises(ValueError, match="loop"):
            Walk([0, 0])

    def test_rejects_negative(self):
        with pytest.raises(ValueError):
            Walk([0, -1])

    def test_simple(self):
        assert Walk([0, 1, 2]).is_simple
        assert not Walk([0, 1, 0]).is_simple
        assert Walk([7]).is_simple

    def test_steps(self):
        assert list(Walk([3, 1, 4]).steps()) == [(3, 1), (1, 4)]
        assert list(Walk([5]).steps()) == []


class TestUnionGraph:
    def test_overlapping_walks_dedup(self):
        g = union_graph(overlap_instance(), 11)
        assert g.edge_count == 13

    def test_single_walk(self):
        g = union_graph(WalkDecomposition([[0, 1, 2]]), 3)
        assert g.edges == {(0, 1), (1, 2)}

    def test_empty(self):
        g = union_graph(WalkDecomposition(), 4)
        assert g.n == 4 and g.edge_count == 0

    def test_out_of_range(self):
        with pytest.raises(ValueError, match="outside"):
            union_graph(WalkDecomposition([[0, 5]]), 3)

    def test_single_vertex_walks_add_nothing(self):
        g = union_graph(WalkDecomposition([[2], [0, 1]]), 3)
        assert g.edges == {(0, 1)}


class TestValidatePaths:
    def test_three_disjoint_paths_ok(self):
        paths = WalkDecomposition([[0, 1, 2, 3], [4, 1, 5], [2, 6]])
        g = union_graph(paths, 7)
        report = validate_path_decomposition(g, paths)
        assert report.ok and report.violations == ()

    def test_uncovered(self):
        g = Digraph(3, [(0, 1), (1, 2)])
        report = validate_path_decomposition(g, WalkDecomposition([[0, 1]]))
        assert not report.ok
        assert any(v.kind is ViolationKind.EDGE_UNCOVERED and "(1, 2)" in v.detail
                   for v in report.violations)

    def test_repeated(self):
        g = Digraph(2, [(0, 1)])
        report = validate_path_decomposition(g, WalkDecomposition([[0, 1], [0, 1]]))
        assert not report.ok
        assert any(v.kind is ViolationKind.EDGE_REPEATED for v in report.violations)

    def test_not_simple(self):
        walk = WalkDecomposition([[0, 1, 0]])
        g = union_graph(walk, 2)
        report = validate_path_decomposition(g, walk)
        assert any(v.kind is ViolationKind.NOT_SIMPLE for v in report.violations)

    def test_edge_not_in_graph(self):
        g = Digraph(3, [(0, 1)])
        report = validate_path_decomposition(g, WalkDecomposition([[0, 1, 2]]))
        assert any(v.kind is ViolationKind.EDGE_NOT_IN_GRAPH and "(1, 2)" in v.detail
                   for v in report.violations)

    def test_never_raises_collects_all(self):
        g = Digraph(4, [(0, 1), (2, 3)])
        report = validate_path_decomposition(g, WalkDecomposition([[0, 1, 0]]))
        kinds = {v.kind for v in report.violations}
        assert ViolationKind.NOT_SIMPLE in kinds
        assert ViolationKind.EDGE_UNCOVERED in kinds
        assert ViolationKind.EDGE_NOT_IN_GRAPH in kinds


class TestValidateWalks:
    def test_overlap_instance_ok(self):
        w = overlap_instance()
        g = union_graph(w, 11)
        assert validate_walk_decomposition(g, w).ok

    def test_overlap_allowed(self):
        g = Digraph(3, [(0, 1), (1, 2)])
        w = WalkDecomposition([[0, 1, 2], [0, 1]])
        assert validate_walk_decomposition(g, w).ok

    def test_uncovered(self):
        g = Digraph(3, [(0, 1), (1, 2)])
        report = validate_walk_decomposition(g, WalkDecomposition([[0, 1]]))
        assert not report.ok
        assert any(v.kind is ViolationKind.EDGE_UNCOVERED and "(1, 2)" in v.detail
                   for v in report.violations)

    def test_repeats_are_fine(self):
        g = Digraph(2, [(0, 1)])
        assert validate_walk_decomposition(g, WalkDecomposition([[0, 1], [0, 1]])).ok
        g2 = Digraph(2, [(0, 1), (1, 0)])
        assert validate_walk_decomposition(g2, WalkDecomposition([[0, 1, 0, 1]])).ok

    def test_empty_family_valid_exactly_for_edgeless(self):
        empty = WalkDecomposition()
        assert validate_walk_decomposition(Digraph(3), empty).ok
        assert validate_path_decomposition(Digraph(3), empty).ok
        report = validate_walk_decomposition(Digraph(2, [(0, 1)]), empty)
        assert not report.ok
        assert report.violations[0].kind is ViolationKind.EDGE_UNCOVERED


class TestLowerBound:
    def test_diamond(self):
        g = Digraph(4, [(0, 1), (0, 2), (1, 3), (2, 3)])
        assert path_number_lower_bound(g) == 2

    def test_single_path(self):
        g = Digraph(5, [(0, 1), (1, 2), (2, 3), (3, 4)])
        assert path_number_lower_bound(g) == 1

    def test_edgeless(self):
        assert path_number_lower_bound(Digraph(6)) == 0

    def test_out_star(self):
        g = Digraph(5, [(0, i) for i in range(1, 5)])
        assert path_number_lower_bound(g) == 4


class TestFileFormat:
    def test_parse(self):
        w = parse_decomposition("# two walks\n0 1 2\n\n3 0\n")
        assert w.k == 2
        assert w[0] == Walk([0, 1, 2]) and w[1] == Walk([3, 0])

    def test_empty_file(self):
        assert parse_decomposition("# only comments\n").k == 0
        assert parse_decomposition("").k == 0

    def test_single_vertex_line(self):
        assert parse_decomposition("7\n")[0] == Walk([7])

    def test_bad_token(self):
        with pytest.raises(DecompositionFormatError, match="line 1"):
            parse_decomposition("0 x 2\n")

    def test_loop_step(self):
        with pytest.raises(DecompositionFormatError, match="line 2"):
            parse_decomposition("0 1\n3 3\n")

    def test_roundtrip(self):
        w = WalkDecomposition([[0, 1, 2], [5], [2, 0]])
        assert parse_decomposition(format_decomposition(w)) == w
        assert format_decomposition(WalkDecomposition()) == ""


@st.composite
def path_decompositions(draw):
    # Build a valid path decomposition directly: simple vertex-disjoint-in-use
    # chains whose steps never collide, by carving paths out of a shuffled
    # vertex pool.
    n = draw(st.integers(min_value=1, max_value=12))
    order = draw(st.permutations(range(n)))
    paths = []
    pos = 0
    while pos < n:
        take = draw(st.integers(min_value=1, max_value=n - pos))
        chunk = list(order[pos:pos + take])
        pos += take
        paths.append(chunk)
    return WalkDecomposition([p for p in paths if len(p) >= 1])


@given(path_decompositions())
@settings(max_examples=100, deadline=None)
def test_valid_path_decomposition_properties(p):
    n = p.max_vertex + 1 if p.k else 1
    g = union_graph(p, n)
    report = validate_path_decomposition(g, p)
    assert report.ok
    # total path length in edges equals the edge count
    assert sum(len(w) - 1 for w in p) == g.edge_count
    # every valid path decomposition is also a valid walk decomposition
    assert validate_walk_decomposition(g, p).ok
