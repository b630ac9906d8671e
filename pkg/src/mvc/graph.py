"""Immutable simple graphs on at most 64 vertices, stored as adjacency bitrows.

Row ``adj[u]`` is an int whose bit ``v`` is set iff ``uv`` is an edge. All the
metrics the rest of the package needs (distances, diameter, complement,
degrees) work directly on these rows.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence

MAX_VERTICES = 64


class GraphError(ValueError):
    """Raised for structurally invalid graphs."""


class DisconnectedGraphError(GraphError):
    """Raised when an operation requires a connected graph."""


class _Disconnected:
    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self) -> str:
        return "DISCONNECTED"

    def __reduce__(self):
        return (_Disconnected, ())


#: Returned by :func:`diameter` for disconnected graphs.
DISCONNECTED = _Disconnected()


def bits(mask: int) -> Iterator[int]:
    """Yield the indices of set bits in increasing order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


@dataclass(frozen=True)
class Graph:
    n: int
    adj: tuple[int, ...]

    def __post_init__(self) -> None:
        if not 1 <= self.n <= MAX_VERTICES:
            raise GraphError(f"vertex count must be in 1..{MAX_VERTICES}, got {self.n}")
        if len(self.adj) != self.n:
            raise GraphError("need exactly one adjacency row per vertex")
        full = (1 << self.n) - 1
        for u, row in enumerate(self.adj):
            if row & ~full:
                raise GraphError(f"row {u} references a vertex >= n")
            if row >> u & 1:
                raise GraphError(f"loop at vertex {u}")
            for v in bits(row):
                if not self.adj[v] >> u & 1:
                    raise GraphError(f"asymmetric adjacency between {u} and {v}")

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> "Graph":
        rows = [0] * n
        for u, v in edges:
            if u == v:
                raise GraphError(f"loop at vertex {u}")
            if not (0 <= u < n and 0 <= v < n):
                raise GraphError(f"edge ({u}, {v}) out of range for n={n}")
            rows[u] |= 1 << v
            rows[v] |= 1 << u
        return cls(n, tuple(rows))

    @classmethod
    def empty(cls, n: int) -> "Graph":
        return cls(n, (0,) * n)

    @classmethod
    def complete(cls, n: int) -> "Graph":
        full = (1 << n) - 1
        return cls(n, tuple(full & ~(1 << u) for u in range(n)))

    @classmethod
    def path(cls, n: int) -> "Graph":
        return cls.from_edges(n, ((i, i + 1) for i in range(n - 1)))

    @classmethod
    def cycle(cls, n: int) -> "Graph":
        if n < 3:
            raise GraphError("a cycle needs at least 3 vertices")
        return cls.from_edges(n, ((i, (i + 1) % n) for i in range(n)))

    @classmethod
    def star(cls, n: int) -> "Graph":
        """Star on ``n`` vertices with center 0."""
        return cls.from_edges(n, ((0, i) for i in range(1, n)))

    @property
    def full_mask(self) -> int:
        return (1 << self.n) - 1

    @property
    def m(self) -> int:
        return sum(row.bit_count() for row in self.adj) // 2

    def degree(self, u: int) -> int:
        return self.adj[u].bit_count()

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adj[u] >> v & 1)

    def neighbors(self, u: int) -> list[int]:
        return list(bits(self.adj[u]))

    def edges(self) -> list[tuple[int, int]]:
        return [(u, v) for u in range(self.n) for v in bits(self.adj[u] >> (u + 1) << (u + 1))]

    def non_edges(self) -> list[tuple[int, int]]:
        return [
            (u, v)
            for u in range(self.n)
            for v in range(u + 1, self.n)
            if not self.adj[u] >> v & 1
        ]

    def add_edge(self, u: int, v: int) -> "Graph":
        rows = list(self.adj)
        rows[u] |= 1 << v
        rows[v] |= 1 << u
        return Graph(self.n, tuple(rows))

    def relabel(self, perm: Sequence[int]) -> "Graph":
        """Return the graph with vertex ``u`` renamed to ``perm[u]``."""
        if sorted(perm) != list(range(self.n)):
            raise GraphError("relabeling must be a permutation of the vertices")
        rows = [0] * self.n
        for u in range(self.n):
            pu = perm[u]
            for v in bits(self.adj[u]):
                rows[pu] |= 1 << perm[v]
        return Graph(self.n, tuple(rows))

    def induced_mask(self, mask: int) -> "Graph":
        """Subgraph induced by the vertices in ``mask``, relabeled 0..k-1."""
        verts = list(bits(mask))
        index = {v: i for i, v in enumerate(verts)}
        return Graph.from_edges(
            len(verts),
            ((index[u], index[v]) for u in verts for v in bits(self.adj[u] & mask) if u < v),
        )

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, edges={self.edges()})"


def complement(g: Graph) -> Graph:
    full = g.full_mask
    return Graph(g.n, tuple(full & ~row & ~(1 << u) for u, row in enumerate(g.adj)))


def reachable(g: Graph, source: int, within: int | None = None) -> int:
    """Mask of vertices reachable from ``source`` using only vertices in ``within``."""
    allowed = g.full_mask if within is None else within
    seen = frontier = 1 << source
    while frontier:
        nxt = 0
        for v in bits(frontier):
            nxt |= g.adj[v]
        frontier = nxt & allowed & ~seen
        seen |= frontier
    return seen


def is_connected(g: Graph) -> bool:
    return reachable(g, 0) == g.full_mask


def is_connected_mask(g: Graph, mask: int) -> bool:
    """Whether the subgraph induced by a nonempty vertex mask is connected."""
    if not mask:
        return False
    start = (mask & -mask).bit_length() - 1
    return reachable(g, start, mask) == mask


def components(g: Graph, mask: int | None = None) -> list[int]:
    """Connected components of the subgraph induced by ``mask``, as masks."""
    rest = g.full_mask if mask is None else mask
    out = []
    while rest:
        start = (rest & -rest).bit_length() - 1
        comp = reachable(g, start, rest)
        out.append(comp)
        rest &= ~comp
    return out


def bfs_layers(g: Graph, source: int) -> list[int]:
    """Distance layers from ``source`` as masks; layer i holds vertices at distance i."""
    seen = frontier = 1 << source
    layers = [frontier]
    while True:
        nxt = 0
        for v in bits(frontier):
            nxt |= g.adj[v]
        frontier = nxt & ~seen
        if not frontier:
            return layers
        seen |= frontier
        layers.append(frontier)


def eccentricity(g: Graph, u: int) -> int | _Disconnected:
    layers = bfs_layers(g, u)
    if sum(layer.bit_count() for layer in layers) != g.n:
        return DISCONNECTED
    return len(layers) - 1


@dataclass(frozen=True)
class DistanceMatrix:
    """Hop distances; ``None`` marks an unreachable pair."""

    rows: tuple[tuple[int | None, ...], ...]

    def __getitem__(self, uv: tuple[int, int]) -> int | None:
        u, v = uv
        return self.rows[u][v]

    @property
    def n(self) -> int:
        return len(self.rows)

    def far_masks(self, threshold: int) -> tuple[int, ...]:
        """Per vertex, mask of vertices at finite distance >= threshold."""
        return tuple(
            sum(1 << v for v, d in enumerate(row) if d is not None and d >= threshold)
            for row in self.rows
        )


def distances(g: Graph) -> DistanceMatrix:
    rows = []
    for u in range(g.n):
        row: list[int | None] = [None] * g.n
        for d, layer in enumerate(bfs_layers(g, u)):
            for v in bits(layer):
                row[v] = d
        rows.append(tuple(row))
    return DistanceMatrix(tuple(rows))


def diameter(g: Graph) -> int | _Disconnected:
    """Largest eccentricity, or :data:`DISCONNECTED`."""
    best = 0
    for u in range(g.n):
        ecc = eccentricity(g, u)
        if ecc is DISCONNECTED:
            return DISCONNECTED
        best = max(best, ecc)
    return best


def connected_diameter(g: Graph) -> int:
    d = diameter(g)
    if d is DISCONNECTED:
        raise DisconnectedGraphError("graph is disconnected")
    return d


def degree_stats(g: Graph) -> tuple[int, int, int]:
    """Return ``(min degree, max degree, edge count)``."""
    degs = [row.bit_count() for row in g.adj]
    return min(degs), max(degs), sum(degs) // 2


# graph6 ---------------------------------------------------------------------


class Graph6Error(ValueError):
    """Base class for graph6 parse failures."""


class Graph6LengthError(Graph6Error):
    """The size prefix is malformed or disagrees with the body length."""


class Graph6PaddingError(Graph6Error):
    """Padding bits after the last edge bit are not zero."""


class Graph6SizeError(Graph6Error):
    """The encoded vertex count is outside 1..64."""


HEADER = ">>graph6<<"


def _graph6_size(n: int) -> str:
    if n <= 62:
        return chr(63 + n)
    return chr(126) + "".join(chr(63 + (n >> s & 63)) for s in (12, 6, 0))


def write_graph6(g: Graph) -> str:
    out = []
    acc = 0
    nbits = 0
    for j in range(1, g.n):
        col = g.adj[j]
        for i in range(j):
            acc = acc << 1 | (col >> i & 1)
            nbits += 1
            if nbits == 6:
                out.append(chr(63 + acc))
                acc = nbits = 0
    if nbits:
        out.append(chr(63 + (acc << (6 - nbits))))
    return _graph6_size(g.n) + "".join(out)


def parse_graph6(text: str) -> Graph:
    s = text.strip()
    if s.startswith(HEADER):
        s = s[len(HEADER):]
    if not s:
        raise Graph6LengthError("empty graph6 string")
    codes = [ord(c) - 63 for c in s]
    if any(not 0 <= c <= 63 for c in codes):
        raise Graph6LengthError("graph6 characters must lie in '?'..'~'")
    if codes[0] < 63:
        n, body = codes[0], codes[1:]
    elif len(codes) >= 4 and codes[1] < 63:
        n = codes[1] << 12 | codes[2] << 6 | codes[3]
        body = codes[4:]
    else:
        raise Graph6LengthError("unsupported or truncated graph6 size prefix")
    if not 1 <= n <= MAX_VERTICES:
        raise Graph6SizeError(f"graph6 vertex count {n} outside 1..{MAX_VERTICES}")
    nbits = n * (n - 1) // 2
    if len(body) != (nbits + 5) // 6:
        raise Graph6LengthError(
            f"expected {(nbits + 5) // 6} data bytes for n={n}, got {len(body)}"
        )
    pad = len(body) * 6 - nbits
    if pad and body[-1] & ((1 << pad) - 1):
        raise Graph6PaddingError("nonzero padding bits")
    rows = [0] * n
    k = 0
    for j in range(1, n):
        for i in range(j):
            if body[k // 6] >> (5 - k % 6) & 1:
                rows[i] |= 1 << j
                rows[j] |= 1 << i
            k += 1
    return Graph(n, tuple(rows))
