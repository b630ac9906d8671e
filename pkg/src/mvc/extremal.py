"""Extremal graph families and the Erdős–Gallai-type thresholds for mvc."""

from __future__ import annotations

import time
from dataclasses import dataclass, field
from itertools import combinations
from math import comb
from typing import Sequence

from .enumeration import enumerate_connected
from .graph import Graph, write_graph6
from .parallel import parallel_map
from .solver import mvc_value

FAMILIES = (
    "path",
    "cycle",
    "complete",
    "star",
    "double_star",
    "clique_pendant_path",
    "clique_edge_path",
    "eg_extremal_g1",
    "clique_plus_p3",
)


class FamilyError(ValueError):
    """Family parameters outside their admissible range."""


@dataclass(frozen=True)
class FamilySpec:
    family: str
    n: int | None = None
    t: int | None = None
    d: int | None = None
    a: int | None = None
    b: int | None = None
    extra: int = 0


def _need(spec: FamilySpec, *names: str) -> list[int]:
    values = []
    for name in names:
        value = getattr(spec, name)
        if value is None:
            raise FamilyError(f"{spec.family} needs parameter {name}")
        values.append(value)
    return values


def _clique_edges(verts: Sequence[int]) -> list[tuple[int, int]]:
    return list(combinations(verts, 2))


def construct(spec: FamilySpec) -> Graph:
    fam = spec.family
    if fam == "path":
        (n,) = _need(spec, "n")
        if n < 1:
            raise FamilyError("path needs n >= 1")
        return Graph.path(n)
    if fam == "cycle":
        (n,) = _need(spec, "n")
        if n < 3:
            raise FamilyError("cycle needs n >= 3")
        return Graph.cycle(n)
    if fam == "complete":
        (n,) = _need(spec, "n")
        if n < 1:
            raise FamilyError("complete graph needs n >= 1")
        return Graph.complete(n)
    if fam == "star":
        (n,) = _need(spec, "n")
        if n < 2:
            raise FamilyError("star needs n >= 2")
        return Graph.star(n)
    if fam == "double_star":
        a, b = _need(spec, "a", "b")
        if a < 1 or b < 1:
            raise FamilyError("double star needs a, b >= 1")
        # centers 0 and 1; leaves 2..a+1 on center 0, the rest on center 1
        edges = [(0, 1)]
        edges += [(0, 2 + i) for i in range(a)]
        edges += [(1, 2 + a + i) for i in range(b)]
        return Graph.from_edges(a + b + 2, edges)
    if fam == "clique_pendant_path":
        n, d = _need(spec, "n", "d")
        if not 3 <= d <= n - 1:
            raise FamilyError("clique_pendant_path needs 3 <= d <= n - 1")
        k = n - d + 1
        # K_k on 0..k-1, path of length d - 1 hanging from vertex 0
        edges = _clique_edges(range(k))
        chain = [0] + list(range(k, n))
        edges += list(zip(chain, chain[1:]))
        return Graph.from_edges(n, edges)
    if fam == "clique_edge_path":
        n, t = _need(spec, "n", "t")
        if not 1 <= t <= n - 5:
            raise FamilyError("clique_edge_path needs 1 <= t <= n - 5")
        # K_{t+2} on 0..t+1 minus edge {t, t+1}, replaced by the path t+1, t+2, ..., n-1, t
        edges = [e for e in _clique_edges(range(t + 2)) if e != (t, t + 1)]
        chain = list(range(t + 1, n)) + [t]
        edges += list(zip(chain, chain[1:]))
        return Graph.from_edges(n, edges)
    if fam == "eg_extremal_g1":
        n, t = _need(spec, "n", "t")
        extra = spec.extra
        if not 1 <= t <= n - 2:
            raise FamilyError("eg_extremal_g1 needs 1 <= t <= n - 2")
        if not 0 <= extra <= t - 1:
            raise FamilyError("eg_extremal_g1 needs 0 <= extra <= t - 1")
        # K_{t+1} on 0..t, path t, t+1, ..., n-1, then t+1 joined to 0..extra-1
        edges = _clique_edges(range(t + 1))
        chain = list(range(t, n))
        edges += list(zip(chain, chain[1:]))
        edges += [(i, t + 1) for i in range(extra)]
        return Graph.from_edges(n, edges)
    if fam == "clique_plus_p3":
        (n,) = _need(spec, "n")
        if n < 4:
            raise FamilyError("clique_plus_p3 needs n >= 4")
        edges = _clique_edges(range(n - 2)) + [(n - 3, n - 2), (n - 2, n - 1)]
        return Graph.from_edges(n, edges)
    raise FamilyError(f"unknown family {fam!r}; expected one of {', '.join(FAMILIES)}")


def _check_k(n: int, k: int) -> None:
    if not 3 <= k <= n:
        raise ValueError(f"k={k} outside 3..{n}")


def f_v(n: int, k: int) -> int:
    """Least m forcing mvc >= k for every connected graph with n vertices and m edges."""
    _check_k(n, k)
    if k == 3:
        return n - 1
    if k <= n - 2:
        return n + comb(k - 2, 2)
    return n - 1 + comb(k - 2, 2)


def g_v(n: int, k: int) -> int | None:
    """Greatest m forcing mvc <= k; only exists for k = n."""
    _check_k(n, k)
    return n - 1 if k == n else None


def eg_band(n: int, m: int) -> int | None:
    """The t with n + C(t,2) <= m <= n + C(t+1,2) - 1, or None for trees."""
    if n < 3:
        raise ValueError("n must be at least 3")
    if not n - 1 <= m <= comb(n, 2):
        raise ValueError(f"m={m} outside {n - 1}..{comb(n, 2)} for n={n}")
    if m < n:
        return None
    t = 1
    while m > n + comb(t + 1, 2) - 1:
        t += 1
    return t


def is_exception_band(n: int, m: int) -> bool:
    t = eg_band(n, m)
    return t is not None and t in (n - 3, n - 4) and m == n + comb(t + 1, 2) - 1


def eg_lower_bound(n: int, m: int) -> int:
    """Guaranteed mvc for every connected graph with n vertices and m edges."""
    t = eg_band(n, m)
    if t is None:
        return 3
    return t + 3 if is_exception_band(n, m) else t + 2


@dataclass
class BandRow:
    m: int
    t: int | None
    exception: bool
    claimed: int
    graphs: int
    observed: int | None
    witness: str | None

    @property
    def passed(self) -> bool:
        # The lower bound is claimed sharp in every band (exception bands included).
        return self.observed is not None and self.observed == self.claimed


@dataclass
class FvRow:
    k: int
    fv: int
    sufficient: bool
    violation: str | None
    witness_m: int | None
    witness: str | None
    witness_mvc: int | None

    @property
    def passed(self) -> bool:
        if not self.sufficient:
            return False
        return self.witness_m is None or self.witness is not None


@dataclass
class EGReport:
    n: int
    scanned: int
    bands: list[BandRow] = field(default_factory=list)
    fv_rows: list[FvRow] = field(default_factory=list)
    duration: float = 0.0

    @property
    def passed(self) -> bool:
        return all(r.passed for r in self.bands) and all(r.passed for r in self.fv_rows)

    def failures(self) -> list[str]:
        out = []
        for r in self.bands:
            if not r.passed:
                out.append(f"n={self.n} m={r.m}: claimed {r.claimed}, observed min {r.observed}")
        for r in self.fv_rows:
            if not r.sufficient:
                out.append(f"n={self.n} k={r.k}: graph {r.violation} with m >= f_v has mvc < k")
            elif not r.passed:
                out.append(f"n={self.n} k={r.k}: no graph with m = f_v - 1 and mvc <= k - 1")
        return out

    def to_dict(self) -> dict:
        return {
            "n": self.n,
            "scanned": self.scanned,
            "passed": self.passed,
            "bands": [
                {
                    "m": r.m,
                    "t": r.t,
                    "exception": r.exception,
                    "claimed": r.claimed,
                    "graphs": r.graphs,
                    "observed": r.observed,
                    "witness": r.witness,
                    "passed": r.passed,
                }
                for r in self.bands
            ],
            "fv": [
                {
                    "k": r.k,
                    "fv": r.fv,
                    "sufficient": r.sufficient,
                    "violation": r.violation,
                    "witness_m": r.witness_m,
                    "witness": r.witness,
                    "witness_mvc": r.witness_mvc,
                    "passed": r.passed,
                }
                for r in self.fv_rows
            ],
            "duration_s": round(self.duration, 3),
        }


def verify_erdos_gallai(
    n: int, jobs: int | None = 1, graphs: Sequence[Graph] | None = None
) -> EGReport:
    """Check every band of the lower bound and both sides of every f_v threshold."""
    start = time.perf_counter()
    pool = list(enumerate_connected(n)) if graphs is None else list(graphs)
    values = parallel_map(mvc_value, pool, jobs)
    by_m: dict[int, list[tuple[int, str]]] = {}
    for g, val in zip(pool, values):
        by_m.setdefault(g.m, []).append((val, write_graph6(g)))
    for rows in by_m.values():
        rows.sort()

    report = EGReport(n=n, scanned=len(pool))
    for m in range(n - 1, comb(n, 2) + 1):
        rows = by_m.get(m, [])
        report.bands.append(
            BandRow(
                m=m,
                t=eg_band(n, m),
                exception=is_exception_band(n, m),
                claimed=eg_lower_bound(n, m),
                graphs=len(rows),
                observed=rows[0][0] if rows else None,
                witness=rows[0][1] if rows else None,
            )
        )
    for k in range(3, n + 1):
        fv = f_v(n, k)
        bad = [
            (val, s) for m, rows in by_m.items() if m >= fv for val, s in rows if val < k
        ]
        bad.sort(key=lambda vs: vs[1])
        below = fv - 1
        witness_m = below if below >= n - 1 else None
        witness = witness_val = None
        if witness_m is not None:
            small = sorted(s for val, s in by_m.get(below, []) if val <= k - 1)
            if small:
                witness = small[0]
                witness_val = next(val for val, s in by_m[below] if s == witness)
        report.fv_rows.append(
            FvRow(
                k=k,
                fv=fv,
                sufficient=not bad,
                violation=bad[0][1] if bad else None,
                witness_m=witness_m,
                witness=witness,
                witness_mvc=witness_val,
            )
        )
    report.duration = time.perf_counter() - start
    return report
