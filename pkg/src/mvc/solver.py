"""Exact monochromatic vertex-connection number.

Some extremal coloring has every color class connected (a disconnected class
can give one component a fresh color without breaking any path). So
``mvc(G) = n - w`` where ``w`` is the least total waste of a family of
disjoint connected vertex sets, all other vertices singletons, that passes
the MVC check. :func:`mvc_exact` searches budgets ``w`` upward;
:func:`mvc_oracle` drops the connectivity restriction and scans every set
partition, which is what the agreement tests compare against.
"""

from __future__ import annotations

import os
from dataclasses import dataclass
from functools import lru_cache

from .coloring import VertexColoring, closed_neighbourhood, is_mvc_coloring
from .enumeration import CapabilityError
from .graph import DisconnectedGraphError, Graph, bits, distances, DISCONNECTED, diameter

DEFAULT_CAP = 12
ORACLE_CAP = 8


def solver_cap() -> int:
    return int(os.environ.get("MVC_SOLVER_CAP", DEFAULT_CAP))


@dataclass(frozen=True)
class SolverResult:
    value: int
    witness: VertexColoring
    nodes: int
    budget: int


def _connected_sets(g: Graph, anchor: int, max_size: int) -> list[list[int]]:
    """Connected vertex sets whose least vertex is ``anchor``, bucketed by size.

    Index ``s`` of the result lists the sets of size ``s`` in increasing mask order.
    """
    allowed = g.full_mask & ~((1 << anchor) - 1)
    by_size: list[set[int]] = [set() for _ in range(max_size + 1)]
    by_size[1].add(1 << anchor)
    for size in range(1, max_size):
        for mask in by_size[size]:
            frontier = closed_neighbourhood(g, mask) & allowed & ~mask
            for v in bits(frontier):
                by_size[size + 1].add(mask | 1 << v)
    return [sorted(level) for level in by_size]


def mvc_exact(g: Graph, cap: int | None = None) -> SolverResult:
    """mvc(G) with a witness coloring whose classes are connected."""
    cap = solver_cap() if cap is None else cap
    if g.n > cap:
        raise CapabilityError(f"exact solver is limited to n <= {cap} (MVC_SOLVER_CAP)")
    d = diameter(g)
    if d is DISCONNECTED:
        raise DisconnectedGraphError("mvc is defined for connected graphs only")
    n = g.n
    if d <= 2:
        return SolverResult(n, VertexColoring.distinct(n), 0, 0)

    # Pairs at distance 2 are always served (through any common neighbour,
    # whatever its class), so only pairs at distance >= 3 need a nontrivial piece.
    far = distances(g).far_masks(3)
    # Any spanning tree coloring keeps >= 3 colors, so waste never exceeds n - 3.
    max_waste = n - 3
    sets = [_connected_sets(g, a, max_waste + 1) for a in range(n)]
    hoods = {}
    nodes = 0

    def hood(mask: int) -> int:
        h = hoods.get(mask)
        if h is None:
            h = hoods[mask] = closed_neighbourhood(g, mask)
        return h

    def served(pieces: list[int]) -> bool:
        cover = [0] * n
        for piece in pieces:
            h = hood(piece)
            for u in bits(h):
                cover[u] |= h
        return all(far[u] & ~cover[u] == 0 for u in range(n))

    def search(v: int, used: int, budget: int, pieces: list[int]) -> list[int] | None:
        nonlocal nodes
        nodes += 1
        if budget == 0:
            return pieces.copy() if served(pieces) else None
        while v < n and used >> v & 1:
            v += 1
        if v == n:
            return None
        free = n - v - (used >> v).bit_count()
        if free - 1 < budget:
            return None
        for size in range(min(budget + 1, len(sets[v]) - 1), 1, -1):
            for mask in sets[v][size]:
                if mask & used:
                    continue
                pieces.append(mask)
                found = search(v + 1, used | mask, budget - size + 1, pieces)
                pieces.pop()
                if found is not None:
                    return found
        return search(v + 1, used | 1 << v, budget, pieces)

    for budget in range(max(0, d - 2), max_waste + 1):
        found = search(0, 0, budget, [])
        if found is not None:
            return SolverResult(n - budget, VertexColoring.from_classes(n, found), nodes, budget)
    raise AssertionError("spanning-tree coloring guarantees a solution within budget n - 3")


@lru_cache(maxsize=None)
def mvc_value(g: Graph) -> int:
    """Memoized ``mvc_exact(g).value``."""
    return mvc_exact(g).value


@lru_cache(maxsize=None)
def _partitions_by_blocks(n: int) -> tuple[tuple[tuple[int, ...], ...], ...]:
    """All set partitions of range(n) as restricted growth strings, by block count."""
    out: list[list[tuple[int, ...]]] = [[] for _ in range(n + 1)]
    rgs = [0] * n

    def rec(i: int, blocks: int) -> None:
        if i == n:
            out[blocks].append(tuple(rgs))
            return
        for c in range(blocks + 1):
            rgs[i] = c
            rec(i + 1, max(blocks, c + 1))

    if n:
        rec(1, 1)
    return tuple(tuple(level) for level in out)


def mvc_oracle(g: Graph, cap: int = ORACLE_CAP) -> int:
    """Maximum color count over all set partitions passing the MVC check."""
    if g.n > cap:
        raise CapabilityError(f"partition oracle is limited to n <= {cap}")
    if diameter(g) is DISCONNECTED:
        raise DisconnectedGraphError("mvc is defined for connected graphs only")
    levels = _partitions_by_blocks(g.n)
    for k in range(g.n, 0, -1):
        for rgs in levels[k]:
            if is_mvc_coloring(g, VertexColoring(rgs)):
                return k
    raise AssertionError("the single-class coloring is always an MVC-coloring")
