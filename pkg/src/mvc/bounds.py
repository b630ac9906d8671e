"""Closed-form bounds on mvc and the leafy spanning trees behind them."""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations
from math import ceil, comb

from .coloring import spanning_tree_coloring
from .graph import DisconnectedGraphError, Graph, bits, connected_diameter, degree_stats, is_connected, is_connected_mask

EXACT_LEAF_CAP = 10


@dataclass(frozen=True)
class TreeWitness:
    edges: tuple[tuple[int, int], ...]
    leaves: int
    heuristic: bool = False


def _tree_from_core(g: Graph, core: int) -> list[tuple[int, int]]:
    """BFS tree of G[core], then every other vertex hung on its least core neighbour."""
    root = (core & -core).bit_length() - 1
    edges = []
    seen = 1 << root
    queue = [root]
    for u in queue:
        for v in bits(g.adj[u] & core & ~seen):
            seen |= 1 << v
            edges.append((u, v))
            queue.append(v)
    for v in bits(g.full_mask & ~core):
        u = (g.adj[v] & core & -(g.adj[v] & core)).bit_length() - 1
        edges.append((min(u, v), max(u, v)))
    return sorted(edges)


def _leaf_count(n: int, edges: list[tuple[int, int]]) -> int:
    deg = [0] * n
    for u, v in edges:
        deg[u] += 1
        deg[v] += 1
    return sum(1 for d in deg if d == 1)


def _is_dominating(g: Graph, mask: int) -> bool:
    cover = mask
    for v in bits(mask):
        cover |= g.adj[v]
    return cover == g.full_mask


def _greedy_core(g: Graph) -> int:
    """Grow a connected dominating set, always taking the vertex that dominates most new vertices."""
    start = max(range(g.n), key=lambda v: (g.degree(v), -v))
    core = 1 << start
    covered = g.adj[start] | core
    while covered != g.full_mask:
        candidates = covered & ~core
        best = max(bits(candidates), key=lambda v: ((g.adj[v] & ~covered).bit_count(), -v))
        core |= 1 << best
        covered |= g.adj[best]
    return core


def max_leaf_spanning_tree(g: Graph, exact_cap: int = EXACT_LEAF_CAP) -> TreeWitness:
    """A spanning tree with as many leaves as possible.

    For n >= 3 the non-leaves of a spanning tree form a connected dominating
    set and vice versa, so the exact answer comes from the smallest connected
    dominating set. Above ``exact_cap`` a greedy dominating set is used and
    the witness is flagged as heuristic.
    """
    if not is_connected(g):
        raise DisconnectedGraphError("spanning trees need a connected graph")
    n = g.n
    if n <= 2:
        edges = g.edges()
        return TreeWitness(tuple(edges), _leaf_count(n, edges) if edges else 0)
    heuristic = n > exact_cap
    if heuristic:
        core = _greedy_core(g)
    else:
        core = next(
            mask
            for size in range(1, n + 1)
            for mask in (sum(1 << v for v in combo) for combo in combinations(range(n), size))
            if _is_dominating(g, mask) and is_connected_mask(g, mask)
        )
    edges = _tree_from_core(g, core)
    return TreeWitness(tuple(edges), _leaf_count(n, edges), heuristic)


def lower_bound_spanning_tree(g: Graph) -> int:
    """Colors used by the spanning-tree coloring of a max-leaf tree (leaves + 1 when n >= 3)."""
    tree = max_leaf_spanning_tree(g)
    return spanning_tree_coloring(g, tree.edges).num_colors


@dataclass(frozen=True)
class MinDegreeBound:
    exact: Fraction
    ceiling: int
    min_degree: int


def min_degree_lower_bound(n: int, delta: int) -> MinDegreeBound | None:
    """Best of n/4 + 3 (delta >= 3), 2n/5 + 13/5 (delta >= 4), n/2 + 3 (delta >= 5)."""
    if n < 1:
        raise ValueError("n must be positive")
    options = []
    if delta >= 3:
        options.append(Fraction(n, 4) + 3)
    if delta >= 4:
        options.append(Fraction(2 * n, 5) + Fraction(13, 5))
    if delta >= 5:
        options.append(Fraction(n, 2) + 3)
    if not options:
        return None
    best = max(options)
    return MinDegreeBound(best, ceil(best), delta)


def diameter_upper_bound(g: Graph) -> int:
    d = connected_diameter(g)
    return g.n if d <= 2 else g.n - d + 2


def cycle_mvc(n: int) -> int:
    if n < 3:
        raise ValueError("cycles need n >= 3")
    return n if n <= 5 else 3


def _least_x(p: int) -> int:
    """Least x >= 1 with x(x-1)/2 >= p; equals ceil((1 + sqrt(1 + 8p)) / 2)."""
    x = 1
    while x * (x - 1) // 2 < p:
        x += 1
    return x


def _is_triangular(p: int) -> bool:
    t = _least_x(p)
    return comb(t, 2) == p


@dataclass(frozen=True)
class MaxDiameter:
    value: int
    p: int
    x: int
    y: int


def max_diameter_terms(n: int, m: int) -> MaxDiameter:
    if not n - 1 <= m <= comb(n, 2):
        raise ValueError(f"m={m} outside {n - 1}..{comb(n, 2)} for n={n}")
    p = m - n + 1
    x = _least_x(p)
    y = 1 if _is_triangular(p) else 2
    return MaxDiameter((n - 1) - x + y, p, x, y)


def max_diameter(n: int, m: int) -> int:
    """Largest diameter of a connected graph with n vertices and m edges."""
    return max_diameter_terms(n, m).value


@dataclass
class BoundsReport:
    n: int
    m: int
    min_degree: int
    diameter: int
    tree_leaf: int
    leaves: int
    heuristic_tree: bool
    min_degree_bound: MinDegreeBound | None
    diameter_upper: int
    exact: int | None = None
    findings: list[str] = field(default_factory=list)

    def consistent(self) -> bool:
        lowers = [self.tree_leaf]
        if self.exact is not None:
            return all(lo <= self.exact for lo in lowers) and self.exact <= self.diameter_upper
        return all(lo <= self.diameter_upper for lo in lowers)

    def to_dict(self) -> dict:
        md = self.min_degree_bound
        return {
            "n": self.n,
            "m": self.m,
            "min_degree": self.min_degree,
            "diameter": self.diameter,
            "lower_tree_leaf": self.tree_leaf,
            "tree_leaves": self.leaves,
            "tree_heuristic": self.heuristic_tree,
            "lower_min_degree": None if md is None else str(md.exact),
            "lower_min_degree_ceil": None if md is None else md.ceiling,
            "upper_diameter": self.diameter_upper,
            "exact": self.exact,
            "findings": list(self.findings),
        }


def bounds_report(g: Graph, exact: int | None = None) -> BoundsReport:
    """Every bound for ``g``; pass ``exact`` to have it recorded and compared.

    The minimum-degree bound is reported but kept out of :meth:`consistent`;
    a small-n violation of it is listed under ``findings`` instead.
    """
    delta, _, m = degree_stats(g)
    tree = max_leaf_spanning_tree(g)
    report = BoundsReport(
        n=g.n,
        m=m,
        min_degree=delta,
        diameter=connected_diameter(g),
        tree_leaf=spanning_tree_coloring(g, tree.edges).num_colors,
        leaves=tree.leaves,
        heuristic_tree=tree.heuristic,
        min_degree_bound=min_degree_lower_bound(g.n, delta),
        diameter_upper=diameter_upper_bound(g),
        exact=exact,
    )
    md = report.min_degree_bound
    if exact is not None and md is not None and exact < md.ceiling:
        report.findings.append(
            f"min-degree bound {md.exact} (ceil {md.ceiling}) exceeds exact value {exact}"
        )
    return report
