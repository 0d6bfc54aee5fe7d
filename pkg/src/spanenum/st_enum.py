"""Spanning-tree edge enumeration for undirected unweighted graphs.

Phase 1 walks the vertices and, for each one that is not yet touched by
the forest, takes the first edge of its adjacency list. The forest is
acyclic because a vertex that received an edge can never be the origin
of another one. Phase 2 grows a tree with a two-queue Prim variant that
prefers forest edges, so the forest ends up inside the tree. Phase 3
emits the tree edges that phase 1 did not already emit.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from fractions import Fraction

from .baselines import PredecessorTree
from .graph import DisconnectedGraphError, EdgeRef, Graph, GraphError
from .stream import EmissionSink

ForestAdjacency = list  # F[v] = list of forest neighbors of v


@dataclass
class ExtensionStats:
    peak_queue_entries: int = 0


def _check_input(g: Graph) -> None:
    if g.directed or g.weighted:
        raise GraphError(f"spanning-tree enumeration needs an undirected unweighted graph, got {g!r}")


def phase1_select_forest(g: Graph, sink: EmissionSink) -> tuple[ForestAdjacency, Fraction]:
    """Select and emit the head-start forest; also return the average degree."""
    _check_input(g)
    n = g.n
    adj = g.adjacency
    forest: ForestAdjacency = [[] for _ in range(n)]
    degree_sum = 0
    for u in range(n):
        nbrs = adj[u]
        degree_sum += len(nbrs)
        if forest[u]:
            continue
        if not nbrs:
            if n == 1:
                break
            raise DisconnectedGraphError(f"vertex {u} is isolated")
        v = nbrs[0]
        forest[u].append(v)
        forest[v].append(u)
        sink.accept(EdgeRef(u, v) if u < v else EdgeRef(v, u))
    return forest, Fraction(degree_sum, n)


def extension_prim(
    g: Graph, forest: ForestAdjacency, stats: ExtensionStats | None = None
) -> PredecessorTree:
    """Extend ``forest`` to a spanning tree, returned as predecessor links.

    Both queues hold vertices rather than edges: a visited vertex is queued
    once per queue and its neighborhood is expanded edge by edge when it
    reaches the front. This keeps queue memory linear in n while dequeuing
    edges in exactly the order an edge queue would.
    Forest edges are always taken before ordinary edges.
    """
    n = g.n
    adj = g.adjacency
    tree: PredecessorTree = [None] * n
    # (tail, head list) per queue entry; the fictitious start edge (0, 0)
    # is the single-entry list [0] hanging off vertex 0
    preselected: deque = deque()
    all_edges: deque = deque([(0, [0])])
    pre_pos = 0
    all_pos = 0
    peak = 1
    while preselected or all_edges:
        if preselected:
            u, heads = preselected[0]
            v = heads[pre_pos]
            pre_pos += 1
            if pre_pos == len(heads):
                preselected.popleft()
                pre_pos = 0
        else:
            u, heads = all_edges[0]
            v = heads[all_pos]
            all_pos += 1
            if all_pos == len(heads):
                all_edges.popleft()
                all_pos = 0
        if tree[v] is None:
            tree[v] = u
            if forest[v]:
                preselected.append((v, forest[v]))
            if adj[v]:
                all_edges.append((v, adj[v]))
            size = len(preselected) + len(all_edges)
            if size > peak:
                peak = size
    tree[0] = None
    if stats is not None:
        stats.peak_queue_entries = peak
    return tree


def finalize(forest: ForestAdjacency, tree: PredecessorTree, sink: EmissionSink) -> None:
    """Clear forest edges from ``tree`` and emit the remaining parent links."""
    for u, nbrs in enumerate(forest):
        for v in nbrs:
            if v < u:
                continue  # each forest edge once
            if tree[v] == u:
                assert tree[u] != v
                tree[v] = None
            elif tree[u] == v:
                tree[u] = None
            else:
                raise AssertionError(f"forest edge {{{u}, {v}}} is not a tree edge")
    for v, u in enumerate(tree):
        if u is not None:
            sink.accept(EdgeRef(u, v) if u < v else EdgeRef(v, u))


def enumerate_st(g: Graph, sink: EmissionSink) -> None:
    _check_input(g)
    forest, _ = phase1_select_forest(g, sink)
    tree = extension_prim(g, forest)
    reached = 1 + sum(p is not None for p in tree)
    if reached != g.n:
        unreached = next(v for v in range(1, g.n) if tree[v] is None)
        raise DisconnectedGraphError(
            f"graph is disconnected: vertex {unreached} not reachable from 0"
        )
    finalize(forest, tree, sink)
