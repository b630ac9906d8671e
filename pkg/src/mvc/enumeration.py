"""Canonical labels and exhaustive enumeration of small connected graphs."""

from __future__ import annotations

import logging
from dataclasses import dataclass
from functools import lru_cache
from pathlib import Path
from typing import Iterator

from .graph import Graph, Graph6Error, bits, is_connected, parse_graph6, write_graph6, HEADER

log = logging.getLogger(__name__)

CANONICAL_CAP = 10
ENUMERATION_CAP = 8


class CapabilityError(RuntimeError):
    """Input exceeds what the built-in algorithms are meant to handle."""


def _refine(g: Graph) -> list[list[int]]:
    """Ordered cells of the coarsest equitable partition refining the degree partition.

    Cell order is derived from isomorphism-invariant signatures only, so
    isomorphic graphs produce corresponding cell sequences.
    """
    color = [row.bit_count() for row in g.adj]
    ncolors = len(set(color))
    while True:
        sigs = [
            (color[v], tuple(sorted(color[w] for w in bits(g.adj[v]))))
            for v in range(g.n)
        ]
        ranking = {s: i for i, s in enumerate(sorted(set(sigs)))}
        color = [ranking[s] for s in sigs]
        if len(ranking) == ncolors:
            break
        ncolors = len(ranking)
    cells: list[list[int]] = [[] for _ in range(ncolors)]
    for v in range(g.n):
        cells[color[v]].append(v)
    return cells


def _canonical_order(g: Graph) -> list[int]:
    """Vertex order minimizing the column-major upper-triangle bit string.

    The minimum is taken over all orders that list the refined cells in
    their invariant order; column ``j`` of the string is fixed once the
    first ``j + 1`` positions are chosen, which gives prefix pruning.
    """
    cells = _refine(g)
    slot_cell = [ci for ci, cell in enumerate(cells) for _ in cell]
    cell_masks = [sum(1 << v for v in cell) for cell in cells]
    n = g.n
    adj = g.adj
    best_cols: list[int] = []
    best_order: list[int] = []
    order: list[int] = []
    cols: list[int] = []

    def search(pos: int, used: int) -> None:
        nonlocal best_cols, best_order
        if pos == n:
            if not best_cols or cols < best_cols:
                best_cols = cols.copy()
                best_order = order.copy()
            return
        for v in bits(cell_masks[slot_cell[pos]] & ~used):
            row = adj[v]
            col = 0
            for u in order:
                col = col << 1 | (row >> u & 1)
            # Prefixes never exceed the best one, so equality is the only tie.
            if best_cols and col > best_cols[pos] and cols == best_cols[:pos]:
                continue
            order.append(v)
            cols.append(col)
            search(pos + 1, used | 1 << v)
            order.pop()
            cols.pop()

    search(0, 0)
    return best_order


def canonical_graph(g: Graph, cap: int = CANONICAL_CAP) -> Graph:
    """The canonical representative of ``g``'s isomorphism class."""
    if g.n > cap:
        raise CapabilityError(f"canonical labeling is limited to n <= {cap}")
    order = _canonical_order(g)
    perm = [0] * g.n
    for pos, v in enumerate(order):
        perm[v] = pos
    return g.relabel(perm)


def canonical_form(g: Graph, cap: int = CANONICAL_CAP) -> bytes:
    """Isomorphism-invariant label: graph6 bytes of the canonical relabeling.

    For a fixed n, graph6 strings compare exactly like the underlying bit
    strings, so sorting labels sorts by adjacency string.
    """
    return write_graph6(canonical_graph(g, cap)).encode("ascii")


@lru_cache(maxsize=None)
def _connected_classes(n: int) -> tuple[Graph, ...]:
    if n == 1:
        return (Graph.empty(1),)
    # Every connected graph on n vertices has a vertex whose removal leaves it
    # connected, so extending each smaller connected class by a new vertex with
    # a nonempty neighbourhood reaches every class.
    found: dict[bytes, Graph] = {}
    last = n - 1
    for h in _connected_classes(n - 1):
        for nbrs in range(1, 1 << last):
            rows = [row | ((nbrs >> u & 1) << last) for u, row in enumerate(h.adj)]
            rows.append(nbrs)
            cand = canonical_graph(Graph(n, tuple(rows)))
            key = write_graph6(cand).encode("ascii")
            if key not in found:
                found[key] = cand
    log.debug("enumerated %d connected classes on %d vertices", len(found), n)
    return tuple(found[k] for k in sorted(found))


def enumerate_connected(n: int, m: int | None = None) -> Iterator[Graph]:
    """One canonical representative per isomorphism class of connected graphs.

    Output is sorted by canonical label.
    """
    if n < 1:
        raise ValueError("n must be positive")
    if n > ENUMERATION_CAP:
        raise CapabilityError(
            f"built-in enumeration stops at n = {ENUMERATION_CAP}; supply a graph6 corpus"
        )
    for g in _connected_classes(n):
        if m is None or g.m == m:
            yield g


class CorpusError(ValueError):
    def __init__(self, path: str | Path, lineno: int, reason: str):
        super().__init__(f"{path}:{lineno}: {reason}")
        self.path = str(path)
        self.lineno = lineno
        self.reason = reason


@dataclass(frozen=True)
class CorpusRecord:
    lineno: int
    graph: Graph


def ingest_corpus(path: str | Path, fail_fast: bool = True) -> Iterator[CorpusRecord]:
    """Read a newline-delimited graph6 file, keeping line numbers.

    With ``fail_fast=False`` bad lines are logged and skipped instead of
    raising :class:`CorpusError`.
    """
    with open(path, encoding="ascii") as fh:
        for lineno, line in enumerate(fh, start=1):
            text = line.strip()
            if not text or (lineno == 1 and text == HEADER):
                continue
            try:
                yield CorpusRecord(lineno, parse_graph6(text))
            except Graph6Error as exc:
                err = CorpusError(path, lineno, str(exc))
                if fail_fast:
                    raise err from exc
                log.warning("%s", err)


def connected_corpus(path: str | Path) -> tuple[dict[int, list[Graph]], int]:
    """Group a corpus's connected graphs by vertex count; also count skipped ones."""
    grouped: dict[int, list[Graph]] = {}
    skipped = 0
    for rec in ingest_corpus(path):
        if is_connected(rec.graph):
            grouped.setdefault(rec.graph.n, []).append(rec.graph)
        else:
            log.info("line %d: disconnected graph skipped", rec.lineno)
            skipped += 1
    return grouped, skipped
