"""Exhaustive claim checks behind ``mvc check``.

Each check scans every graph in its range and returns a :class:`CheckReport`
whose counterexamples carry the offending graph6 string. All claims are
theorems, so any counterexample points at a bug in this package.
"""

from __future__ import annotations

import time
from dataclasses import dataclass, field
from math import comb
from typing import Callable

from .bounds import cycle_mvc, diameter_upper_bound, lower_bound_spanning_tree, max_diameter, min_degree_lower_bound
from .enumeration import ENUMERATION_CAP, CapabilityError, connected_corpus, enumerate_connected
from .extremal import verify_erdos_gallai
from .graph import MAX_VERTICES, Graph, connected_diameter, degree_stats, write_graph6
from .nordhaus_gaddum import verify_ng
from .parallel import parallel_map
from .solver import ORACLE_CAP, mvc_exact, mvc_oracle, mvc_value, solver_cap

CLAIMS = (
    "cycles",
    "prop23",
    "erdos-gallai",
    "nordhaus-gaddum",
    "diameter-formula",
    "oracle-agreement",
    "bounds-sandwich",
)


@dataclass
class CheckReport:
    claim: str
    n_min: int
    n_max: int
    scanned: int = 0
    counterexamples: list[dict] = field(default_factory=list)
    details: dict = field(default_factory=dict)
    duration: float = 0.0

    @property
    def passed(self) -> bool:
        return not self.counterexamples

    def fail(self, g: Graph | str, detail: str) -> None:
        g6 = g if isinstance(g, str) else write_graph6(g)
        self.counterexamples.append({"graph6": g6, "detail": detail})

    def to_dict(self) -> dict:
        return {
            "claim": self.claim,
            "n_range": [self.n_min, self.n_max],
            "scanned": self.scanned,
            "passed": self.passed,
            "counterexamples": self.counterexamples,
            "details": self.details,
            "duration_s": round(self.duration, 3),
        }

    def tsv_rows(self) -> list[list[str]]:
        rows = [["claim", "n_min", "n_max", "scanned", "counterexamples", "passed", "duration_s"]]
        rows.append(
            [
                self.claim,
                str(self.n_min),
                str(self.n_max),
                str(self.scanned),
                str(len(self.counterexamples)),
                "pass" if self.passed else "FAIL",
                f"{self.duration:.3f}",
            ]
        )
        for ce in self.counterexamples:
            rows.append(["counterexample", ce["graph6"], ce["detail"]])
        return rows


class GraphSource:
    """Graphs per vertex count: the built-in enumeration or a graph6 corpus."""

    def __init__(self, corpus: str | None = None):
        self.corpus = corpus
        self.skipped = 0
        self._grouped: dict[int, list[Graph]] | None = None
        if corpus is not None:
            self._grouped, self.skipped = connected_corpus(corpus)

    def graphs(self, n: int) -> list[Graph]:
        if self._grouped is not None:
            return self._grouped.get(n, [])
        return list(enumerate_connected(n))

    def cap(self, limit: int = ENUMERATION_CAP) -> int:
        # corpora are external, so only the per-graph solver caps apply
        return MAX_VERTICES if self._grouped is not None else limit


def _range_check(n_max: int, cap: int, what: str) -> None:
    if n_max > cap:
        raise CapabilityError(f"{what} supports n <= {cap}, got n_max={n_max}")


def check_cycles(n_max: int, **_: object) -> CheckReport:
    _range_check(n_max, solver_cap(), "the exact solver")
    report = CheckReport("cycles", 3, n_max)
    values = {}
    for n in range(3, n_max + 1):
        g = Graph.cycle(n)
        got = mvc_exact(g).value
        values[n] = got
        report.scanned += 1
        if got != cycle_mvc(n):
            report.fail(g, f"mvc(C_{n}) = {got}, formula gives {cycle_mvc(n)}")
    report.details["values"] = values
    return report


def _prop23_row(g: Graph) -> tuple[int, int]:
    return connected_diameter(g), mvc_value(g)


def check_prop23(n_max: int, jobs: int | None = 1, source: GraphSource | None = None) -> CheckReport:
    source = source or GraphSource()
    _range_check(n_max, source.cap(), "graph enumeration")
    report = CheckReport("prop23", 1, n_max)
    per_n = {}
    for n in range(1, n_max + 1):
        graphs = source.graphs(n)
        rows = parallel_map(_prop23_row, graphs, jobs)
        per_n[n] = len(graphs)
        report.scanned += len(graphs)
        for g, (d, val) in zip(graphs, rows):
            if (val == n) != (d <= 2):
                report.fail(g, f"mvc = {val}, n = {n}, diameter = {d}")
            if d >= 3 and val > n - d + 2:
                report.fail(g, f"mvc = {val} > n - d + 2 = {n - d + 2}")
            if n >= 3 and val < 3:
                report.fail(g, f"mvc = {val} < 3")
    report.details["graphs_per_n"] = per_n
    return report


def check_erdos_gallai(n_max: int, jobs: int | None = 1, source: GraphSource | None = None) -> CheckReport:
    source = source or GraphSource()
    _range_check(n_max, source.cap(), "graph enumeration")
    report = CheckReport("erdos-gallai", 3, n_max)
    per_n = {}
    for n in range(3, n_max + 1):
        eg = verify_erdos_gallai(n, jobs, source.graphs(n) if source.corpus else None)
        report.scanned += eg.scanned
        for msg in eg.failures():
            report.fail(f"n={n}", msg)
        per_n[n] = {
            "scanned": eg.scanned,
            "band_witnesses": {r.m: r.witness for r in eg.bands},
            "fv_witnesses": {r.k: r.witness for r in eg.fv_rows if r.witness is not None},
            "exception_bands": [r.m for r in eg.bands if r.exception],
        }
    report.details["per_n"] = per_n
    return report


def check_nordhaus_gaddum(n_max: int, jobs: int | None = 1, source: GraphSource | None = None) -> CheckReport:
    source = source or GraphSource()
    _range_check(n_max, source.cap(), "graph enumeration")
    report = CheckReport("nordhaus-gaddum", 4, n_max)
    per_n = {}
    for n in range(4, n_max + 1):
        ng = verify_ng(n, jobs, source.graphs(n) if source.corpus else None)
        report.scanned += ng.scanned
        report.counterexamples.extend(ng.counterexamples)
        per_n[n] = {
            "pairs": ng.pairs,
            "min_sum": ng.min_sum,
            "max_sum": ng.max_sum,
            "lower_witness": ng.lower_witnesses[:1],
            "upper_witness": ng.upper_witnesses[:1],
        }
        if n >= 5 and (not ng.lower_witnesses or not ng.upper_witnesses):
            report.fail(f"n={n}", "missing a sharpness witness for n + 3 or 2n")
    report.details["per_n"] = per_n
    return report


def check_diameter_formula(n_max: int, jobs: int | None = 1, source: GraphSource | None = None) -> CheckReport:
    source = source or GraphSource()
    _range_check(n_max, source.cap(), "graph enumeration")
    report = CheckReport("diameter-formula", 1, n_max)
    for n in range(1, n_max + 1):
        best: dict[int, tuple[int, Graph]] = {}
        graphs = source.graphs(n)
        report.scanned += len(graphs)
        for g in graphs:
            d = connected_diameter(g)
            if g.m not in best or d > best[g.m][0]:
                best[g.m] = (d, g)
        for m in range(n - 1, comb(n, 2) + 1):
            want = max_diameter(n, m)
            if m not in best:
                if source.corpus is None:
                    report.fail(f"n={n},m={m}", "no connected graph observed")
            elif best[m][0] > want or (source.corpus is None and best[m][0] != want):
                report.fail(best[m][1], f"n={n} m={m}: max diameter {best[m][0]}, formula {want}")
    return report


def _agreement_row(g: Graph) -> tuple[int, int]:
    return mvc_exact(g).value, mvc_oracle(g)


def check_oracle_agreement(n_max: int, jobs: int | None = 1, source: GraphSource | None = None) -> CheckReport:
    source = source or GraphSource()
    _range_check(n_max, min(source.cap(), ORACLE_CAP), "the partition oracle")
    report = CheckReport("oracle-agreement", 1, n_max)
    per_n = {}
    for n in range(1, n_max + 1):
        graphs = source.graphs(n)
        per_n[n] = len(graphs)
        report.scanned += len(graphs)
        for g, (exact, oracle) in zip(graphs, parallel_map(_agreement_row, graphs, jobs)):
            if exact != oracle:
                report.fail(g, f"solver {exact} != oracle {oracle}")
    report.details["graphs_per_n"] = per_n
    return report


def _sandwich_row(g: Graph) -> tuple[int, int, int]:
    return lower_bound_spanning_tree(g), mvc_value(g), diameter_upper_bound(g)


def check_bounds_sandwich(n_max: int, jobs: int | None = 1, source: GraphSource | None = None) -> CheckReport:
    source = source or GraphSource()
    _range_check(n_max, source.cap(), "graph enumeration")
    report = CheckReport("bounds-sandwich", 1, n_max)
    findings = []
    for n in range(1, n_max + 1):
        graphs = source.graphs(n)
        report.scanned += len(graphs)
        for g, (lo, val, hi) in zip(graphs, parallel_map(_sandwich_row, graphs, jobs)):
            if not lo <= val <= hi:
                report.fail(g, f"spanning-tree bound {lo} <= mvc {val} <= diameter bound {hi} fails")
            md = min_degree_lower_bound(n, degree_stats(g)[0])
            if md is not None and val < md.ceiling:
                findings.append({"graph6": write_graph6(g), "mvc": val, "min_degree_bound": str(md.exact)})
    report.details["min_degree_findings"] = findings
    return report


CHECKS: dict[str, Callable[..., CheckReport]] = {
    "cycles": check_cycles,
    "prop23": check_prop23,
    "erdos-gallai": check_erdos_gallai,
    "nordhaus-gaddum": check_nordhaus_gaddum,
    "diameter-formula": check_diameter_formula,
    "oracle-agreement": check_oracle_agreement,
    "bounds-sandwich": check_bounds_sandwich,
}


def run_check(claim: str, n_max: int, jobs: int | None = 1, corpus: str | None = None) -> CheckReport:
    if claim not in CHECKS:
        raise ValueError(f"unknown claim {claim!r}; expected one of {', '.join(CLAIMS)}")
    start = time.perf_counter()
    if claim == "cycles":
        report = check_cycles(n_max)
    else:
        source = GraphSource(corpus)
        report = CHECKS[claim](n_max, jobs=jobs, source=source)
        if corpus is not None:
            report.details["corpus"] = {"path": corpus, "disconnected_skipped": source.skipped}
    report.duration = time.perf_counter() - start
    return report

