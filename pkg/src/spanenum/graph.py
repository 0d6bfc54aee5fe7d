"""Adjacency-list graphs, the fixture text format and G(n, p) generation."""

from __future__ import annotations

from collections import deque
from fractions import Fraction
from typing import Iterator, NamedTuple, Optional, Sequence

import numpy as np

MAX_WEIGHT = 2**64 - 1
GNP_MAX_ATTEMPTS = 1000


class GraphError(ValueError):
    """Raised when a graph invariant or an algorithm precondition is violated."""


class DisconnectedGraphError(GraphError):
    pass


class EdgeRef(NamedTuple):
    u: int
    v: int
    weight: Optional[int] = None

    @classmethod
    def undirected(cls, u: int, v: int, weight: Optional[int] = None) -> "EdgeRef":
        if u > v:
            u, v = v, u
        return cls(u, v, weight)

    @property
    def pair(self) -> tuple[int, int]:
        return (self.u, self.v)


class Graph:
    """Simple graph on vertices ``0..n-1`` stored as adjacency lists.

    Each vertex owns a list of neighbor ids and, for weighted graphs, a
    parallel list of integer weights. List order is insertion order and
    algorithms rely on it ("first edge in the adjacency list").
    Undirected edges are stored once per endpoint; directed edges only in
    the out-list of the tail.
    """

    __slots__ = ("n", "directed", "weighted", "_adj", "_wts", "_m", "_log")

    def __init__(self, n: int, directed: bool = False, weighted: bool = False):
        if n < 1:
            raise GraphError(f"graph needs at least one vertex, got n={n}")
        self.n = n
        self.directed = directed
        self.weighted = weighted
        self._adj: list[list[int]] = [[] for _ in range(n)]
        self._wts: Optional[list[list[int]]] = [[] for _ in range(n)] if weighted else None
        self._m = 0
        self._log: Optional[list[EdgeRef]] = []

    def __repr__(self) -> str:
        kind = "directed" if self.directed else "undirected"
        w = ", weighted" if self.weighted else ""
        return f"Graph(n={self.n}, m={self._m}, {kind}{w})"

    @property
    def m(self) -> int:
        return self._m

    def add_edge(self, u: int, v: int, weight: Optional[int] = None) -> None:
        n = self.n
        if not (0 <= u < n and 0 <= v < n):
            raise GraphError(f"edge ({u}, {v}) has an endpoint outside 0..{n - 1}")
        if u == v:
            raise GraphError(f"self-loop at vertex {u}")
        if self.weighted:
            if weight is None:
                raise GraphError(f"weighted graph requires a weight for edge ({u}, {v})")
            if not 0 <= weight <= MAX_WEIGHT:
                raise GraphError(f"weight {weight} outside the unsigned 64-bit range")
        elif weight is not None:
            raise GraphError(f"unweighted graph got a weight for edge ({u}, {v})")
        if v in self._adj[u]:
            raise GraphError(f"duplicate edge ({u}, {v})")
        self._adj[u].append(v)
        if self._wts is not None:
            self._wts[u].append(weight)
        if not self.directed:
            self._adj[v].append(u)
            if self._wts is not None:
                self._wts[v].append(weight)
        self._m += 1
        if self._log is not None:
            self._log.append(EdgeRef(u, v, weight))

    @classmethod
    def _from_lists(
        cls,
        adjacency: list[list[int]],
        weights: Optional[list[list[int]]],
        directed: bool,
        m: int,
    ) -> "Graph":
        # Trusted bulk constructor for generators; skips per-edge validation.
        g = cls(len(adjacency), directed, weights is not None)
        g._adj = adjacency
        g._wts = weights
        g._m = m
        g._log = None
        return g

    def neighbors(self, u: int) -> list[int]:
        return self._adj[u]

    def weights(self, u: int) -> list[int]:
        if self._wts is None:
            raise GraphError("graph is unweighted")
        return self._wts[u]

    def degree(self, u: int) -> int:
        return len(self._adj[u])

    @property
    def adjacency(self) -> list[list[int]]:
        return self._adj

    @property
    def adjacency_weights(self) -> Optional[list[list[int]]]:
        return self._wts

    def edges(self) -> Iterator[EdgeRef]:
        """Yield every edge once; undirected edges in canonical (u < v) order."""
        wts = self._wts
        for u, nbrs in enumerate(self._adj):
            ws = wts[u] if wts is not None else None
            for i, v in enumerate(nbrs):
                if self.directed or u < v:
                    yield EdgeRef(u, v, ws[i] if ws is not None else None)

    def insertion_order(self) -> Iterator[EdgeRef]:
        """Edges in the order they were added, which reproduces adjacency order.

        Bulk-built graphs have sorted adjacency lists, for which canonical
        lexicographic order is the insertion order.
        """
        if self._log is not None:
            return iter(self._log)
        return self.edges()

    def has_edge(self, u: int, v: int) -> bool:
        return 0 <= u < self.n and v in self._adj[u]

    def edge_weight(self, u: int, v: int) -> Optional[int]:
        idx = self._adj[u].index(v)
        return self._wts[u][idx] if self._wts is not None else None

    def edge_index(self) -> dict[tuple[int, int], Optional[int]]:
        """Map of stored (u, v) pairs to weights, both orientations if undirected."""
        index: dict[tuple[int, int], Optional[int]] = {}
        for e in self.edges():
            index[(e.u, e.v)] = e.weight
            if not self.directed:
                index[(e.v, e.u)] = e.weight
        return index


def new_graph(n: int, directed: bool = False, weighted: bool = False) -> Graph:
    return Graph(n, directed, weighted)


def degree_stats(g: Graph) -> tuple[int, Fraction]:
    """Maximum and average (out-)degree; the average is exact."""
    lengths = [len(a) for a in g.adjacency]
    return max(lengths), Fraction(sum(lengths), g.n)


def is_connected(g: Graph) -> bool:
    """Weak connectivity: a traversal from 0 ignoring directions reaches every vertex."""
    adj = g.adjacency
    if g.directed:
        undirected = [list(a) for a in adj]
        for u, nbrs in enumerate(adj):
            for v in nbrs:
                undirected[v].append(u)
        adj = undirected
    seen = [False] * g.n
    seen[0] = True
    count = 1
    queue = deque([0])
    while queue:
        u = queue.popleft()
        for v in adj[u]:
            if not seen[v]:
                seen[v] = True
                count += 1
                queue.append(v)
    return count == g.n


def graph_from_edge_arrays(
    n: int,
    us: np.ndarray,
    vs: np.ndarray,
    ws: Optional[np.ndarray] = None,
) -> Graph:
    """Build an undirected graph from canonical edge arrays (u < v, no repeats).

    Adjacency lists come out in the order ``add_edge`` would produce when
    edges are inserted in lexicographic (u, v) order, i.e. sorted by
    neighbor id. Python ints are shared across lists to keep large dense
    graphs within memory.
    """
    m = len(us)
    src = np.concatenate([us, vs])
    dst = np.concatenate([vs, us])
    order = np.lexsort((dst, src))
    dst = dst[order]
    offsets = np.searchsorted(src[order], np.arange(n + 1))
    ids = list(range(n))
    lookup = ids.__getitem__
    bounds = offsets.tolist()
    adjacency = [list(map(lookup, dst[bounds[i] : bounds[i + 1]].tolist())) for i in range(n)]
    weights = None
    if ws is not None:
        w_all = np.concatenate([ws, ws])[order]
        lo, hi = (int(w_all.min()), int(w_all.max())) if m else (0, 0)
        if hi - lo <= 1 << 20:
            shared = list(range(lo, hi + 1))
            wlookup = lambda x: shared[x - lo]  # noqa: E731
            weights = [list(map(wlookup, w_all[bounds[i] : bounds[i + 1]].tolist())) for i in range(n)]
        else:
            weights = [w_all[bounds[i] : bounds[i + 1]].tolist() for i in range(n)]
    return Graph._from_lists(adjacency, weights, directed=False, m=m)


def _gnp_draw(n: int, p: float, seed: int, weighted: bool, weight_range: tuple[int, int]) -> Graph:
    rng = np.random.default_rng(seed)
    us_parts, vs_parts = [], []
    for u in range(n - 1):
        hits = np.flatnonzero(rng.random(n - 1 - u) < p)
        if hits.size:
            us_parts.append(np.full(hits.size, u, dtype=np.int64))
            vs_parts.append(hits + (u + 1))
    if us_parts:
        us = np.concatenate(us_parts)
        vs = np.concatenate(vs_parts)
    else:
        us = vs = np.empty(0, dtype=np.int64)
    ws = None
    if weighted:
        lo, hi = weight_range
        ws = rng.integers(lo, hi, size=us.size, endpoint=True, dtype=np.uint64)
    return graph_from_edge_arrays(n, us, vs, ws)


def gnp_random(
    n: int,
    p: float,
    seed: int,
    weighted: bool = False,
    weight_range: tuple[int, int] = (1, 1000),
    max_attempts: int = GNP_MAX_ATTEMPTS,
) -> Graph:
    """Connected G(n, p) graph, deterministic in ``(n, p, seed)``.

    Disconnected draws are rejected and re-drawn with ``seed + 1``, which
    samples G(n, p) conditioned on connectivity.
    """
    if n < 1:
        raise GraphError(f"n must be positive, got {n}")
    if not 0 < p <= 1:
        raise GraphError(f"edge probability must lie in (0, 1], got {p}")
    lo, hi = weight_range
    if weighted and not 0 <= lo <= hi <= MAX_WEIGHT:
        raise GraphError(f"invalid weight range {weight_range}")
    for attempt in range(max_attempts):
        g = _gnp_draw(n, p, (seed + attempt) % 2**64, weighted, weight_range)
        if is_connected(g):
            return g
    raise GraphError(
        f"no connected G(n={n}, p={p}) draw after {max_attempts} attempts starting at seed {seed}"
    )


def read_graph(path) -> Graph:
    """Parse the fixture format: header ``n m directed weighted`` then ``u v [w]`` lines."""
    with open(path) as fh:
        return parse_graph(fh.read())


def parse_graph(text: str) -> Graph:
    lines = [ln.split() for ln in text.splitlines()]
    lines = [ln for ln in lines if ln and not ln[0].startswith("#")]
    if not lines or len(lines[0]) != 4:
        raise GraphError("graph header must be 'n m directed weighted'")
    try:
        n, m, directed, weighted = (int(x) for x in lines[0])
    except ValueError as exc:
        raise GraphError(f"malformed graph header: {' '.join(lines[0])}") from exc
    if directed not in (0, 1) or weighted not in (0, 1):
        raise GraphError("directed and weighted flags must be 0 or 1")
    body = lines[1:]
    if len(body) != m:
        raise GraphError(f"header announces {m} edges but {len(body)} edge lines follow")
    g = Graph(n, bool(directed), bool(weighted))
    arity = 3 if weighted else 2
    for lineno, parts in enumerate(body, start=2):
        if len(parts) != arity:
            raise GraphError(f"line {lineno}: expected {arity} fields, got {len(parts)}")
        try:
            vals = [int(x) for x in parts]
        except ValueError as exc:
            raise GraphError(f"line {lineno}: non-integer field") from exc
        g.add_edge(vals[0], vals[1], vals[2] if weighted else None)
    return g


def format_graph(g: Graph) -> str:
    out = [f"{g.n} {g.m} {int(g.directed)} {int(g.weighted)}"]
    for e in g.insertion_order():
        out.append(f"{e.u} {e.v} {e.weight}" if g.weighted else f"{e.u} {e.v}")
    return "\n".join(out) + "\n"


def write_graph(g: Graph, path) -> None:
    with open(path, "w") as fh:
        fh.write(format_graph(g))


def graph_from_edges(
    n: int,
    edges: Sequence[Sequence[int]],
    directed: bool = False,
    weighted: bool = False,
) -> Graph:
    """Convenience builder: ``edges`` holds ``(u, v)`` or ``(u, v, w)`` tuples."""
    g = Graph(n, directed, weighted)
    for e in edges:
        g.add_edge(e[0], e[1], e[2] if weighted else None)
    return g
