from fractions import Fraction
from itertools import combinations
from math import comb

import networkx as nx
import pytest

from mvc.bounds import (
    bounds_report,
    cycle_mvc,
    diameter_upper_bound,
    lower_bound_spanning_tree,
    max_diameter,
    max_diameter_terms,
    max_leaf_spanning_tree,
    min_degree_lower_bound,
)
from mvc.coloring import check_spanning_tree
from mvc.enumeration import enumerate_connected
from mvc.extremal import FamilySpec, construct
from mvc.graph import DisconnectedGraphError, Graph, diameter
from mvc.solver import mvc_exact, mvc_value

from conftest import from_nx


def brute_max_leaves(g: Graph) -> int:
    best = 0
    for edges in combinations(g.edges(), g.n - 1):
        tree = Graph.from_edges(g.n, edges)
        if nx.is_connected(nx.Graph(edges)) and len({v for e in edges for v in e}) == g.n:
            best = max(best, sum(1 for v in range(g.n) if tree.degree(v) == 1))
    return best


class TestMaxLeafTree:
    def test_k4(self):
        assert max_leaf_spanning_tree(Graph.complete(4)).leaves == 3

    @pytest.mark.parametrize("n", range(3, 11))
    def test_cycle(self, n):
        assert max_leaf_spanning_tree(Graph.cycle(n)).leaves == 2

    def test_cube(self, cube):
        assert max_leaf_spanning_tree(cube).leaves == 4
        assert brute_max_leaves(cube) == 4

    @pytest.mark.parametrize("n", range(2, 7))
    def test_matches_exhaustive_trees(self, n):
        for g in enumerate_connected(n):
            tree = max_leaf_spanning_tree(g)
            check_spanning_tree(g, tree.edges)
            assert tree.leaves == brute_max_leaves(g)
            assert not tree.heuristic

    def test_heuristic_flag_above_cap(self):
        g = Graph.cycle(12)
        tree = max_leaf_spanning_tree(g)
        assert tree.heuristic
        check_spanning_tree(g, tree.edges)
        assert tree.leaves == 2

    def test_disconnected(self):
        with pytest.raises(DisconnectedGraphError):
            max_leaf_spanning_tree(Graph.empty(3))


class TestLowerBoundSpanningTree:
    @pytest.mark.parametrize("n", range(3, 10))
    def test_star(self, n):
        assert lower_bound_spanning_tree(Graph.star(n)) == n

    @pytest.mark.parametrize("n", range(3, 10))
    def test_path(self, n):
        assert lower_bound_spanning_tree(Graph.path(n)) == 3

    def test_k4(self):
        assert lower_bound_spanning_tree(Graph.complete(4)) == 4


class TestMinDegree:
    def test_delta3(self):
        b = min_degree_lower_bound(20, 3)
        assert (b.exact, b.ceiling) == (Fraction(8), 8)

    def test_delta5(self):
        assert min_degree_lower_bound(20, 5).ceiling == 13

    def test_delta4_rational(self):
        b = min_degree_lower_bound(9, 4)
        assert b.exact == Fraction(31, 5)
        assert b.ceiling == 7

    def test_absent(self):
        assert min_degree_lower_bound(20, 2) is None

    def test_holds_on_small_graphs(self):
        # Recorded as findings rather than failures in the harness; at n <= 7 none occur.
        for n in range(4, 8):
            for g in enumerate_connected(n):
                b = min_degree_lower_bound(n, min(g.degree(v) for v in range(n)))
                if b is not None:
                    assert mvc_value(g) >= b.ceiling


class TestDiameterUpperBound:
    def test_complete(self):
        assert diameter_upper_bound(Graph.complete(5)) == 5

    def test_path(self):
        assert diameter_upper_bound(Graph.path(6)) == 3

    @pytest.mark.parametrize("n, d", [(8, 4), (7, 3), (9, 6), (6, 5)])
    def test_attained_by_clique_pendant_path(self, n, d):
        g = construct(FamilySpec("clique_pendant_path", n=n, d=d))
        assert diameter(g) == d
        assert mvc_exact(g).value == diameter_upper_bound(g) == n - d + 2

    def test_disconnected(self):
        with pytest.raises(DisconnectedGraphError):
            diameter_upper_bound(Graph.empty(2))


class TestCycleFormula:
    @pytest.mark.parametrize("n, value", [(3, 3), (4, 4), (5, 5), (6, 3), (12, 3)])
    def test_values(self, n, value):
        assert cycle_mvc(n) == value

    @pytest.mark.parametrize("n", range(3, 13))
    def test_solver(self, n):
        assert mvc_exact(Graph.cycle(n)).value == cycle_mvc(n)

    def test_range(self):
        with pytest.raises(ValueError):
            cycle_mvc(2)


class TestMaxDiameter:
    @pytest.mark.parametrize("n", range(2, 12))
    def test_trees(self, n):
        assert max_diameter(n, n - 1) == n - 1

    def test_six_six(self):
        assert max_diameter(6, 6) == 4
        assert max(diameter(g) for g in enumerate_connected(6, 6)) == 4

    def test_ten_twelve(self):
        t = max_diameter_terms(10, 12)
        assert (t.value, t.p, t.x, t.y) == (7, 3, 3, 1)
        # K_4 carries p = 3 independent cycles; hanging a path of 6 more vertices gives 12 edges
        h = nx.complete_graph(4)
        nx.add_path(h, [0, 4, 5, 6, 7, 8, 9])
        g = from_nx(h)
        assert (g.n, g.m, diameter(g)) == (10, 12, 7)

    @pytest.mark.parametrize("p", range(0, 60))
    def test_x_matches_closed_form(self, p):
        import math

        n = 40
        x = max_diameter_terms(n, n - 1 + p).x
        assert x == math.ceil((1 + math.sqrt(1 + 8 * p)) / 2)

    def test_complete(self):
        for n in range(2, 10):
            assert max_diameter(n, comb(n, 2)) == 1

    def test_range(self):
        with pytest.raises(ValueError):
            max_diameter(5, 3)
        with pytest.raises(ValueError):
            max_diameter(5, 11)


class TestReport:
    def test_p6(self):
        r = bounds_report(Graph.path(6), exact=3)
        assert (r.tree_leaf, r.diameter_upper, r.exact) == (3, 3, 3)
        assert r.consistent()

    def test_sandwich_n6(self):
        for g in enumerate_connected(6):
            r = bounds_report(g, mvc_value(g))
            assert r.consistent()
            assert r.tree_leaf <= r.exact <= r.diameter_upper
