"""mvc(G) + mvc(complement of G) over graphs whose complement is also connected."""

from __future__ import annotations

import time
from dataclasses import dataclass, field
from typing import Sequence

from .enumeration import canonical_form, enumerate_connected
from .graph import DISCONNECTED, Graph, GraphError, bits, complement, diameter, write_graph6
from .parallel import parallel_map
from .solver import mvc_value


class ComplementDisconnectedError(GraphError):
    """The graph or its complement is disconnected, so the pair is out of scope."""


@dataclass(frozen=True)
class NGRecord:
    graph6: str
    diameter: int
    complement_diameter: int
    mvc: int
    complement_mvc: int

    @property
    def total(self) -> int:
        return self.mvc + self.complement_mvc


def ng_sum(g: Graph) -> NGRecord:
    h = complement(g)
    dg, dh = diameter(g), diameter(h)
    if dg is DISCONNECTED or dh is DISCONNECTED:
        side = "graph" if dg is DISCONNECTED else "complement"
        raise ComplementDisconnectedError(f"{side} is disconnected")
    return NGRecord(write_graph6(g), dg, dh, mvc_value(g), mvc_value(h))


def spanning_double_star_centers(g: Graph) -> tuple[int, int] | None:
    """Adjacent ``u, v`` that can be the centers of a spanning double star of ``g``.

    Needs every other vertex adjacent to ``u`` or ``v``, and each center to
    have at least one other neighbour so that both keep a leaf.
    """
    full = g.full_mask
    for u in range(g.n):
        for v in bits(g.adj[u] >> (u + 1) << (u + 1)):
            pair = 1 << u | 1 << v
            rest = full & ~pair
            if not rest or (g.adj[u] | g.adj[v]) & rest != rest:
                continue
            if g.adj[u] & rest and g.adj[v] & rest and rest.bit_count() >= 2:
                return u, v
    return None


@dataclass
class NGReport:
    n: int
    scanned: int = 0
    pairs: int = 0
    min_sum: int | None = None
    max_sum: int | None = None
    lower_witnesses: list[str] = field(default_factory=list)
    upper_witnesses: list[str] = field(default_factory=list)
    counterexamples: list[dict] = field(default_factory=list)
    duration: float = 0.0

    @property
    def passed(self) -> bool:
        return not self.counterexamples

    def to_dict(self) -> dict:
        return {
            "n": self.n,
            "scanned": self.scanned,
            "pairs": self.pairs,
            "min_sum": self.min_sum,
            "max_sum": self.max_sum,
            "lower_witnesses": self.lower_witnesses,
            "upper_witnesses": self.upper_witnesses,
            "counterexamples": self.counterexamples,
            "passed": self.passed,
            "duration_s": round(self.duration, 3),
        }


def verify_ng(n: int, jobs: int | None = 1, graphs: Sequence[Graph] | None = None) -> NGReport:
    """Scan complement-connected pairs, each pair once, keyed by the smaller canonical label."""
    if n < 4:
        raise ValueError("both a graph and its complement can be connected only for n >= 4")
    start = time.perf_counter()
    pool = list(enumerate_connected(n)) if graphs is None else list(graphs)
    report = NGReport(n=n, scanned=len(pool))
    chosen = []
    seen: set[bytes] = set()
    for g in pool:
        h = complement(g)
        if diameter(h) is DISCONNECTED:
            continue
        key = min(canonical_form(g), canonical_form(h))
        if key not in seen:
            seen.add(key)
            chosen.append(g)
    records = parallel_map(ng_sum, chosen, jobs)
    report.pairs = len(records)

    for g, rec in zip(chosen, records):
        s = rec.total
        problems = []
        if n >= 5 and not n + 3 <= s <= 2 * n:
            problems.append(f"sum {s} outside [{n + 3}, {2 * n}]")
        if n == 4 and s != 6:
            problems.append(f"sum {s} != 6 at n = 4")
        for gg, dg, dh, label in (
            (g, rec.diameter, rec.complement_diameter, "graph"),
            (complement(g), rec.complement_diameter, rec.diameter, "complement"),
        ):
            if dg > 3 and dh != 2:
                problems.append(f"{label} diameter {dg} > 3 but other side has diameter {dh}")
            if dg == 3 and spanning_double_star_centers(complement(gg)) is None:
                problems.append(f"{label} diameter 3 but other side has no spanning double star")
        if problems:
            report.counterexamples.append({"graph6": rec.graph6, "detail": "; ".join(problems)})
        if s == n + 3:
            report.lower_witnesses.append(rec.graph6)
        if s == 2 * n:
            report.upper_witnesses.append(rec.graph6)
    sums = [rec.total for rec in records]
    if sums:
        report.min_sum, report.max_sum = min(sums), max(sums)
    report.lower_witnesses.sort()
    report.upper_witnesses.sort()
    report.duration = time.perf_counter() - start
    return report
