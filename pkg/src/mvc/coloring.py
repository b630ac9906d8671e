"""Vertex colorings and the monochromatic vertex-connection (MVC) property.

A path is vertex-monochromatic when its internal vertices share a color.
Such a path with at least one internal vertex consists of a connected
monochromatic piece ``S`` plus two endpoints attached to it by single edges.
So a pair ``{u, v}`` is served iff ``u ~ v`` or both lie in the closed
neighbourhood ``N[S]`` of some connected component ``S`` of a color class.
The checks below work from those closed-neighbourhood masks.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

from .graph import Graph, GraphError, bits, components, is_connected


@dataclass(frozen=True)
class VertexColoring:
    colors: tuple[int, ...]

    def __init__(self, colors: Iterable[int]):
        object.__setattr__(self, "colors", tuple(int(c) for c in colors))

    @classmethod
    def parse(cls, text: str) -> "VertexColoring":
        """Parse the CLI form ``"0,1,1,2"``."""
        try:
            return cls(int(tok) for tok in text.split(","))
        except ValueError as exc:
            raise ValueError(f"bad coloring {text!r}: expected comma-separated integers") from exc

    @classmethod
    def distinct(cls, n: int) -> "VertexColoring":
        return cls(range(n))

    @classmethod
    def from_classes(cls, n: int, classes: Sequence[int]) -> "VertexColoring":
        """Build from disjoint vertex masks; uncovered vertices become singletons."""
        colors = [-1] * n
        for c, mask in enumerate(classes):
            for v in bits(mask):
                colors[v] = c
        nxt = len(classes)
        for v in range(n):
            if colors[v] < 0:
                colors[v] = nxt
                nxt += 1
        return cls(colors).normalized()

    def __len__(self) -> int:
        return len(self.colors)

    def __str__(self) -> str:
        return ",".join(map(str, self.colors))

    @property
    def n(self) -> int:
        return len(self.colors)

    @property
    def num_colors(self) -> int:
        return len(set(self.colors))

    def classes(self) -> dict[int, int]:
        """Map color id -> vertex mask."""
        out: dict[int, int] = {}
        for v, c in enumerate(self.colors):
            out[c] = out.get(c, 0) | 1 << v
        return out

    def normalized(self) -> "VertexColoring":
        """Rename colors to 0..k-1 in order of first appearance."""
        ids: dict[int, int] = {}
        return VertexColoring(ids.setdefault(c, len(ids)) for c in self.colors)


@dataclass(frozen=True)
class WasteAccount:
    per_class: dict[int, int]
    total: int
    colors: int

    @property
    def n(self) -> int:
        return self.colors + self.total


def waste(f: VertexColoring) -> WasteAccount:
    """Each nontrivial class of t vertices wastes t - 1 colors."""
    per_class = {
        c: mask.bit_count() - 1 for c, mask in f.classes().items() if mask.bit_count() > 1
    }
    total = sum(per_class.values())
    return WasteAccount(per_class, total, f.n - total)


def closed_neighbourhood(g: Graph, mask: int) -> int:
    out = mask
    for v in bits(mask):
        out |= g.adj[v]
    return out


def piece_masks(g: Graph, f: VertexColoring) -> list[int]:
    """Closed neighbourhoods of every connected piece of every color class."""
    out = []
    for mask in f.classes().values():
        for comp in components(g, mask):
            out.append(closed_neighbourhood(g, comp))
    return out


def _check_length(g: Graph, f: VertexColoring) -> None:
    if f.n != g.n:
        raise ValueError(f"coloring has {f.n} entries for a graph on {g.n} vertices")


def unserved_pair(g: Graph, f: VertexColoring) -> tuple[int, int] | None:
    """First pair (in lexicographic order) with no vertex-monochromatic path, else None."""
    _check_length(g, f)
    cover = [g.adj[u] | 1 << u for u in range(g.n)]
    for mask in piece_masks(g, f):
        for u in bits(mask):
            cover[u] |= mask
    full = g.full_mask
    for u in range(g.n):
        if cover[u] != full:
            missing = full & ~cover[u]
            return u, (missing & -missing).bit_length() - 1
    return None


def is_mvc_coloring(g: Graph, f: VertexColoring) -> bool:
    return unserved_pair(g, f) is None


def spanning_tree_coloring(g: Graph, tree_edges: Iterable[tuple[int, int]]) -> VertexColoring:
    """Non-leaves of the tree share one color; each leaf gets its own."""
    tree = check_spanning_tree(g, tree_edges)
    leaves = [v for v in range(g.n) if tree.degree(v) == 1]
    if len(leaves) == g.n:
        return VertexColoring.distinct(g.n)
    colors = [0] * g.n
    for i, v in enumerate(leaves, start=1):
        colors[v] = i
    return VertexColoring(colors)


def check_spanning_tree(g: Graph, tree_edges: Iterable[tuple[int, int]]) -> Graph:
    edges = [tuple(sorted(e)) for e in tree_edges]
    if len(set(edges)) != len(edges):
        raise GraphError("tree has repeated edges")
    for u, v in edges:
        if not g.has_edge(u, v):
            raise GraphError(f"tree edge ({u}, {v}) is not an edge of the graph")
    tree = Graph.from_edges(g.n, edges)
    if len(edges) != g.n - 1 or not is_connected(tree):
        raise GraphError("edges do not form a spanning tree")
    return tree


def double_star_coloring(g: Graph, u: int, v: int) -> VertexColoring:
    """Color the adjacent centers ``u``, ``v`` alike and every other vertex freshly."""
    if not g.has_edge(u, v):
        raise GraphError("double-star centers must be adjacent")
    return VertexColoring.from_classes(g.n, [1 << u | 1 << v])


def normalize_connected_classes(g: Graph, f: VertexColoring) -> VertexColoring:
    """Split every disconnected color class into one class per component."""
    pair = unserved_pair(g, f)
    if pair is not None:
        raise ValueError(f"input is not an MVC-coloring: pair {pair} is unserved")
    pieces = [comp for mask in f.classes().values() for comp in components(g, mask)]
    pieces.sort(key=lambda mask: (mask & -mask))
    return VertexColoring.from_classes(g.n, pieces)
