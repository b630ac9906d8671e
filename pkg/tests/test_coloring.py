import pytest
from hypothesis import assume, given, settings
from hypothesis import strategies as st

from mvc.bounds import max_leaf_spanning_tree
from mvc.coloring import (
    VertexColoring,
    double_star_coloring,
    is_mvc_coloring,
    normalize_connected_classes,
    spanning_tree_coloring,
    unserved_pair,
    waste,
)
from mvc.enumeration import enumerate_connected
from mvc.extremal import FamilySpec, construct
from mvc.graph import Graph, GraphError, diameter, is_connected

from test_graph import graphs


def has_mono_path(g: Graph, colors, u: int, v: int) -> bool:
    """Depth-first search over simple paths from u to v, internal vertices one color."""

    def walk(x, color, seen):
        for y in g.neighbors(x):
            if y == v:
                return True
            if y in seen or (color is not None and colors[y] != color):
                continue
            if walk(y, colors[y], seen | {y}):
                return True
        return False

    return g.has_edge(u, v) or walk(u, None, {u})


def brute_mvc(g: Graph, colors) -> bool:
    return all(has_mono_path(g, colors, u, v) for u in range(g.n) for v in range(u + 1, g.n))


@st.composite
def colored_graphs(draw, max_n=7):
    g = draw(graphs(min_n=2, max_n=max_n))
    colors = draw(st.lists(st.integers(0, g.n - 1), min_size=g.n, max_size=g.n))
    return g, VertexColoring(colors)


class TestIsMvcColoring:
    def test_p4_middle_pair(self):
        assert is_mvc_coloring(Graph.path(4), VertexColoring([0, 1, 1, 2]))

    def test_p4_distinct(self):
        f = VertexColoring([0, 1, 2, 3])
        assert not is_mvc_coloring(Graph.path(4), f)
        assert unserved_pair(Graph.path(4), f) == (0, 3)

    @pytest.mark.parametrize("n", range(2, 9))
    def test_star(self, n):
        assert is_mvc_coloring(Graph.star(n), VertexColoring.distinct(n))

    def test_length_mismatch(self):
        with pytest.raises(ValueError):
            is_mvc_coloring(Graph.path(4), VertexColoring([0, 1]))

    @given(colored_graphs())
    @settings(max_examples=300, deadline=None)
    def test_matches_path_search(self, case):
        g, f = case
        assert is_mvc_coloring(g, f) == brute_mvc(g, f.colors)

    def test_matches_path_search_exhaustively_on_small_graphs(self):
        from itertools import product

        for n in range(2, 6):
            for g in enumerate_connected(n):
                for colors in product(range(3), repeat=n):
                    assert is_mvc_coloring(g, VertexColoring(colors)) == brute_mvc(g, colors)

    @given(colored_graphs(), st.data())
    @settings(max_examples=200, deadline=None)
    def test_monotone_under_edge_addition(self, case, data):
        g, f = case
        assume(g.non_edges())
        u, v = data.draw(st.sampled_from(g.non_edges()))
        if is_mvc_coloring(g, f):
            assert is_mvc_coloring(g.add_edge(u, v), f)

    @pytest.mark.parametrize("n", range(1, 8))
    def test_diameter_two_distinct_colors(self, n):
        for g in enumerate_connected(n):
            if diameter(g) <= 2:
                assert is_mvc_coloring(g, VertexColoring.distinct(n))

    def test_renaming_colors_is_noop(self):
        g = Graph.cycle(7)
        f = VertexColoring([0, 0, 0, 0, 0, 1, 2])
        renamed = VertexColoring([9, 9, 9, 9, 9, 4, 7])
        assert is_mvc_coloring(g, f) and is_mvc_coloring(g, renamed)


class TestWaste:
    def test_distinct(self):
        acc = waste(VertexColoring.distinct(7))
        assert (acc.total, acc.colors) == (0, 7)

    def test_one_triple(self):
        acc = waste(VertexColoring([0, 0, 0, 1, 2, 3, 4]))
        assert (acc.total, acc.colors) == (2, 5)
        assert acc.per_class == {0: 2}

    def test_single_class(self):
        acc = waste(VertexColoring([3] * 7))
        assert (acc.total, acc.colors) == (6, 1)

    @given(st.lists(st.integers(0, 5), min_size=1, max_size=12))
    def test_identity(self, colors):
        f = VertexColoring(colors)
        acc = waste(f)
        assert acc.colors + acc.total == len(colors)
        assert acc.colors == f.num_colors
        assert (acc.total == 0) == (len(set(colors)) == len(colors))


class TestSpanningTreeColoring:
    def test_star_tree(self):
        g = Graph.complete(6)
        f = spanning_tree_coloring(g, [(0, i) for i in range(1, 6)])
        assert f.num_colors == 6

    @pytest.mark.parametrize("n", range(3, 9))
    def test_path_tree(self, n):
        g = Graph.path(n)
        assert spanning_tree_coloring(g, g.edges()).num_colors == 3

    def test_double_star(self):
        g = construct(FamilySpec("double_star", a=3, b=3))
        f = spanning_tree_coloring(g, g.edges())
        assert f.num_colors == g.n - 1
        assert is_mvc_coloring(g, f)
        assert double_star_coloring(g, 0, 1).num_colors == g.n - 1

    def test_rejects_non_tree(self):
        g = Graph.cycle(4)
        with pytest.raises(GraphError):
            spanning_tree_coloring(g, g.edges())
        with pytest.raises(GraphError):
            spanning_tree_coloring(g, [(0, 1), (1, 2)])
        with pytest.raises(GraphError):
            spanning_tree_coloring(g, [(0, 1), (1, 2), (0, 2)])

    @given(graphs(min_n=2, max_n=9))
    @settings(max_examples=100, deadline=None)
    def test_always_mvc(self, g):
        assume(is_connected(g))
        tree = max_leaf_spanning_tree(g)
        f = spanning_tree_coloring(g, tree.edges)
        assert is_mvc_coloring(g, f)
        if g.n >= 3:
            assert f.num_colors == tree.leaves + 1 >= 3


class TestNormalize:
    def test_rejects_non_mvc(self):
        g = Graph.cycle(6)
        f = VertexColoring([0, 1, 2, 0, 3, 4])
        assert not is_mvc_coloring(g, f)
        with pytest.raises(ValueError):
            normalize_connected_classes(g, f)

    def test_identity_on_connected_classes(self):
        g = Graph.path(5)
        f = VertexColoring([0, 1, 1, 1, 2])
        assert normalize_connected_classes(g, f) == f

    def test_splits_disconnected_class(self):
        # leaves 1 and 2 of the star share a color but are not adjacent
        g = Graph.star(5)
        f = VertexColoring([0, 1, 1, 2, 3])
        assert is_mvc_coloring(g, f)
        out = normalize_connected_classes(g, f)
        assert out.num_colors == 5
        assert is_mvc_coloring(g, out)

    @given(colored_graphs(max_n=7))
    @settings(max_examples=200, deadline=None)
    def test_preserves_mvc_and_never_loses_colors(self, case):
        g, f = case
        assume(is_connected(g) and is_mvc_coloring(g, f))
        out = normalize_connected_classes(g, f)
        assert is_mvc_coloring(g, out)
        assert out.num_colors >= f.num_colors
        for mask in out.classes().values():
            assert is_connected(g.induced_mask(mask))
