"""MST edge enumeration with a Borůvka-round head start.

Three phases per run:

1. One Borůvka round: every vertex considers its lightest incident edge
   (ties to the smaller neighbor id) and the edge is emitted unless it was
   already selected from the other side. At least ``ceil(n/2)`` edges come
   out of this phase, each after a scan of at most two adjacency lists.
2. A black-box MST algorithm completes the tree under a comparison order
   in which every pre-selected edge is lighter than every other edge.
   This replaces rewriting their weights to ``W - 1``; no arithmetic is
   done on weights.
3. The pre-selected edges are cleared from the black box's predecessor
   array and whatever remains is emitted.

Emissions are immediate. The runtime bound that would drive emission
pacing is therefore never computed.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable, Optional, Sequence

import numpy as np

from .baselines import BLACKBOXES, EdgeKey, PredecessorTree, check_spanning_tree, parents_to_edges
from .graph import DisconnectedGraphError, EdgeRef, Graph, GraphError, is_connected
from .stream import EmissionSink

BlackBoxMst = Callable[[Graph, EdgeKey], PredecessorTree]


class ConsistencyError(RuntimeError):
    """The black box returned something that contradicts the phase-1 forest."""


@dataclass
class OriginArray:
    """Phase-1 forest: ``origin[u] = v`` if ``{u, v}`` was selected from ``u``."""

    origin: list
    selected: list[EdgeRef] = field(default_factory=list)
    min_weight: Optional[int] = None

    def __len__(self) -> int:
        return len(self.selected)

    def contains(self, u: int, v: int) -> bool:
        o = self.origin
        return o[u] == v or o[v] == u


@dataclass
class VertexRelabeling:
    """``new_id[old] = new`` and ``old_id[new] = old``; degrees ascend along new ids."""

    new_id: list[int]
    old_id: list[int]


@dataclass
class MstRunInfo:
    forest: OriginArray
    tree: PredecessorTree
    relabeling: Optional[VertexRelabeling] = None


def _check_input(g: Graph) -> None:
    if g.directed or not g.weighted:
        raise GraphError(f"MST enumeration needs an undirected weighted graph, got {g!r}")


def _lightest(nbrs: list[int], ws: list[int], rank: Optional[list[int]]) -> tuple[int, int]:
    """(weight, neighbor) of the lightest incident edge, ties to the smaller
    (possibly renamed) neighbor id."""
    w = min(ws)
    i = ws.index(w)
    try:
        ws.index(w, i + 1)
    except ValueError:
        return w, nbrs[i]
    tied = [v for v, x in zip(nbrs, ws) if x == w]
    return w, (min(tied) if rank is None else min(tied, key=rank.__getitem__))


def boruvka_round(
    g: Graph,
    sink: Optional[EmissionSink] = None,
    relabeling: Optional[VertexRelabeling] = None,
) -> OriginArray:
    """Select every vertex's lightest incident edge exactly once.

    Vertices are processed by increasing id; with ``relabeling`` the ids
    are the renamed ones, so processing order, the ``u < v`` test and the
    tie-break all follow ascending degree. Selected edges are emitted to
    ``sink`` as they are found.
    """
    _check_input(g)
    n = g.n
    adj = g.adjacency
    wts = g.adjacency_weights
    rank = relabeling.new_id if relabeling is not None else None
    order = relabeling.old_id if relabeling is not None else range(n)
    selected: list[EdgeRef] = []  # the linked list of selections, in order
    origins: list[int] = []
    min_weight = None
    for u in order:
        nbrs = adj[u]
        if not nbrs:
            if n == 1:
                break
            raise DisconnectedGraphError(f"vertex {u} is isolated")
        w, v = _lightest(nbrs, wts[u], rank)
        if min_weight is None or w < min_weight:
            min_weight = w
        ru, rv = (u, v) if rank is None else (rank[u], rank[v])
        if ru > rv and _lightest(adj[v], wts[v], rank)[1] == u:
            continue
        e = EdgeRef(u, v) if u < v else EdgeRef(v, u)
        selected.append(e)
        origins.append(u)
        if sink is not None:
            sink.accept(e)
    origin: list = [None] * n
    for u, e in zip(origins, selected):
        origin[u] = e.v if e.u == u else e.u
    return OriginArray(origin, selected, min_weight)


class PreselectedOrder:
    """Edge order with every pre-selected edge ranked below all others.

    Within each class edges keep weight order with the canonical edge id as
    tie-break. ``key`` is the form the black boxes consume: ordinary edges
    get the plain ``(w, lo, hi)`` key and pre-selected edges
    ``(-1, w, lo, hi)``, which sorts below every unsigned weight.
    ``compare`` is the three-way oracle on ``(u, v, w)`` triples.
    """

    def __init__(self, forest: OriginArray):
        self.forest = forest
        origin = forest.origin

        def key(u: int, v: int, w: int) -> tuple:
            if u > v:
                u, v = v, u
            if origin[u] == v or origin[v] == u:
                return (-1, w, u, v)
            return (w, u, v)

        self.key = key

    def __call__(self, u: int, v: int, w: int) -> tuple:
        return self.key(u, v, w)

    def compare(self, a: tuple, b: tuple) -> int:
        ka, kb = self.key(*a), self.key(*b)
        return (ka > kb) - (ka < kb)


def preselected_comparator(g: Graph, forest: OriginArray) -> PreselectedOrder:
    if len(forest.origin) != g.n:
        raise GraphError("forest does not belong to this graph")
    return PreselectedOrder(forest)


def _finalize(g: Graph, forest: OriginArray, tree: PredecessorTree, sink: EmissionSink) -> None:
    n = g.n
    if len(tree) != n or sum(p is not None for p in tree) != n - 1:
        raise ConsistencyError("black box did not return a rooted spanning tree")
    remaining = list(tree)
    for u, v in enumerate(forest.origin):
        if v is None:
            continue
        if remaining[u] == v:
            remaining[u] = None
        elif remaining[v] == u:
            remaining[v] = None
        else:
            raise ConsistencyError(f"pre-selected edge {{{u}, {v}}} missing from black-box tree")
    for v, u in enumerate(remaining):
        if u is not None:
            sink.accept(EdgeRef(u, v) if u < v else EdgeRef(v, u))


def _enumerate(
    g: Graph,
    blackbox: BlackBoxMst,
    sink: EmissionSink,
    relabeling: Optional[VertexRelabeling],
    validate: bool,
) -> MstRunInfo:
    _check_input(g)
    if g.n == 1:
        return MstRunInfo(OriginArray([None]), [None], relabeling)
    forest = boruvka_round(g, sink, relabeling)
    order = preselected_comparator(g, forest)
    try:
        tree = blackbox(g, order.key)
    except DisconnectedGraphError:
        raise
    except GraphError as exc:
        if not is_connected(g):
            raise DisconnectedGraphError(str(exc)) from exc
        raise
    if validate:
        report = check_spanning_tree(g, parents_to_edges(tree))
        if not report:
            raise ConsistencyError(f"black-box output is not a spanning tree: {report.reason}")
    _finalize(g, forest, tree, sink)
    return MstRunInfo(forest, tree, relabeling)


def enumerate_mst(
    g: Graph, blackbox: BlackBoxMst | str, sink: EmissionSink, validate: bool = False
) -> MstRunInfo:
    """Enumerate MST edges, processing phase-1 vertices by increasing id."""
    if isinstance(blackbox, str):
        blackbox = BLACKBOXES[blackbox]
    return _enumerate(g, blackbox, sink, None, validate)


def relabeling_from_degrees(degrees: Sequence[int]) -> VertexRelabeling:
    """Stable bucket sort of vertex ids by degree, linear in n.

    Degrees below 2**16 go through numpy's stable sort, which is a radix
    sort for 16-bit keys; otherwise explicit buckets are used.
    """
    n = len(degrees)
    if n <= 1 << 16:
        order = np.argsort(np.asarray(degrees, dtype=np.uint16), kind="stable")
        inverse = np.empty(n, dtype=np.intp)
        inverse[order] = np.arange(n)
        return VertexRelabeling(inverse.tolist(), order.tolist())
    buckets: list[list[int]] = [[] for _ in range(max(degrees) + 1)]
    for v, d in enumerate(degrees):
        buckets[d].append(v)
    old_id = [v for bucket in buckets for v in bucket]
    new_id = [0] * n
    for new, old in enumerate(old_id):
        new_id[old] = new
    return VertexRelabeling(new_id, old_id)


def degree_sort_relabeling(g: Graph) -> VertexRelabeling:
    if g.n <= 1 << 16:  # simple graph: every degree fits in 16 bits
        return relabeling_from_degrees(np.fromiter(map(len, g.adjacency), dtype=np.uint16, count=g.n))
    return relabeling_from_degrees([len(a) for a in g.adjacency])


def enumerate_mst_degree_sorted(
    g: Graph, blackbox: BlackBoxMst | str, sink: EmissionSink, validate: bool = False
) -> MstRunInfo:
    """Like :func:`enumerate_mst`, but phase 1 walks vertices by ascending degree.

    The graph is not rebuilt; the relabeling arrays are consulted on the
    fly and emitted edges keep their original ids.
    """
    _check_input(g)
    if isinstance(blackbox, str):
        blackbox = BLACKBOXES[blackbox]
    return _enumerate(g, blackbox, sink, degree_sort_relabeling(g), validate)
