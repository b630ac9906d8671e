import random

import pytest
from hypothesis import assume, given, settings

from mvc.coloring import is_mvc_coloring, waste
from mvc.enumeration import CapabilityError, enumerate_connected
from mvc.graph import DisconnectedGraphError, Graph, diameter, is_connected
from mvc.solver import mvc_exact, mvc_oracle, mvc_value

from test_graph import graphs


@pytest.mark.parametrize(
    "g, value",
    [
        (Graph.cycle(5), 5),
        (Graph.cycle(8), 3),
        (Graph.path(5), 3),
        (Graph.complete(4), 4),
        (Graph.cycle(6), 3),
        (Graph.cycle(7), 3),
        (Graph.star(7), 7),
        (Graph.empty(1), 1),
        (Graph.complete(2), 2),
    ],
)
def test_known_values(g, value):
    assert mvc_exact(g).value == value
    if g.n <= 8:
        assert mvc_oracle(g) == value


def test_petersen(petersen):
    res = mvc_exact(petersen)
    assert res.value == 10
    assert res.nodes == 0


def test_p5_by_oracle():
    # every set partition of five vertices
    assert mvc_oracle(Graph.path(5)) == 3


@pytest.mark.parametrize("n", range(1, 7))
def test_agreement_with_oracle(n):
    for g in enumerate_connected(n):
        assert mvc_exact(g).value == mvc_oracle(g), g


def test_trees_agree_with_oracle():
    for n in range(2, 8):
        for g in enumerate_connected(n, n - 1):
            assert mvc_exact(g).value == mvc_oracle(g)


@pytest.mark.parametrize("n", range(1, 8))
def test_witness_contract(n):
    for g in enumerate_connected(n):
        res = mvc_exact(g)
        assert is_mvc_coloring(g, res.witness)
        assert res.witness.num_colors == res.value
        acc = waste(res.witness)
        assert acc.colors + acc.total == n
        for mask in res.witness.classes().values():
            assert is_connected(g.induced_mask(mask))


@pytest.mark.parametrize("n", range(1, 8))
def test_full_value_iff_small_diameter(n):
    for g in enumerate_connected(n):
        value = mvc_exact(g).value
        assert (value == n) == (diameter(g) <= 2)
        if n >= 3:
            assert value >= 3


def test_edge_monotonicity_random():
    rng = random.Random(7)
    pool = [g for n in range(4, 8) for g in enumerate_connected(n) if g.non_edges()]
    for g in rng.sample(pool, 200):
        e = rng.choice(g.non_edges())
        assert mvc_value(g) <= mvc_value(g.add_edge(*e))


@given(graphs(min_n=3, max_n=10))
@settings(max_examples=60, deadline=None)
def test_random_graphs_sandwich(g):
    assume(is_connected(g))
    res = mvc_exact(g)
    d = diameter(g)
    assert 3 <= res.value <= (g.n if d <= 2 else g.n - d + 2)
    assert is_mvc_coloring(g, res.witness)


def test_deterministic_witness():
    g = Graph.cycle(9)
    assert mvc_exact(g).witness == mvc_exact(g).witness


def test_disconnected():
    g = Graph.from_edges(4, [(0, 1), (2, 3)])
    with pytest.raises(DisconnectedGraphError):
        mvc_exact(g)
    with pytest.raises(DisconnectedGraphError):
        mvc_oracle(g)


def test_caps(monkeypatch):
    with pytest.raises(CapabilityError):
        mvc_exact(Graph.cycle(13))
    with pytest.raises(CapabilityError):
        mvc_oracle(Graph.cycle(9))
    monkeypatch.setenv("MVC_SOLVER_CAP", "14")
    assert mvc_exact(Graph.cycle(13)).value == 3
    monkeypatch.setenv("MVC_SOLVER_CAP", "6")
    with pytest.raises(CapabilityError):
        mvc_exact(Graph.cycle(7))
