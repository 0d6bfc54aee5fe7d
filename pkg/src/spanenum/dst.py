"""Directed spanning trees (out-branchings) of unweighted digraphs."""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass

from .baselines import PredecessorTree
from .graph import EdgeRef, Graph, GraphError
from .stream import EmissionSink


class NoSpanningTreeError(GraphError):
    """The digraph has no directed spanning tree (from the requested root)."""


@dataclass
class SccLabeling:
    component: list[int]
    count: int
    members: list[list[int]]


def _check_input(g: Graph) -> None:
    if not g.directed:
        raise GraphError(f"expected a directed graph, got {g!r}")


def enumerate_dst_rooted(g: Graph, root: int, sink: EmissionSink) -> PredecessorTree:
    """BFS from ``root`` emitting the discovering edge of every new vertex.

    The result is a shortest-distance tree. Emission order is BFS discovery
    order, fixed by the adjacency lists.
    """
    _check_input(g)
    n = g.n
    if not 0 <= root < n:
        raise GraphError(f"root {root} outside 0..{n - 1}")
    adj = g.adjacency
    parent: PredecessorTree = [None] * n
    seen = [False] * n
    seen[root] = True
    queue = deque([root])
    found = 1
    while queue:
        u = queue.popleft()
        for v in adj[u]:
            if not seen[v]:
                seen[v] = True
                parent[v] = u
                found += 1
                sink.accept(EdgeRef(u, v))
                queue.append(v)
    if found != n:
        missing = seen.index(False)
        raise NoSpanningTreeError(f"vertex {missing} is not reachable from root {root}")
    return parent


def tarjan_scc(g: Graph) -> SccLabeling:
    """Strongly connected components by an iterative lowlink search.

    Components are numbered in the order Tarjan's algorithm completes them,
    which is a reverse topological order of the condensation.
    """
    n = g.n
    adj = g.adjacency
    index = [-1] * n
    low = [0] * n
    on_stack = [False] * n
    component = [-1] * n
    stack: list[int] = []
    members: list[list[int]] = []
    counter = 0
    for s in range(n):
        if index[s] != -1:
            continue
        index[s] = low[s] = counter
        counter += 1
        stack.append(s)
        on_stack[s] = True
        work = [(s, 0)]
        while work:
            v, i = work[-1]
            nbrs = adj[v]
            if i < len(nbrs):
                work[-1] = (v, i + 1)
                w = nbrs[i]
                if index[w] == -1:
                    index[w] = low[w] = counter
                    counter += 1
                    stack.append(w)
                    on_stack[w] = True
                    work.append((w, 0))
                elif on_stack[w] and index[w] < low[v]:
                    low[v] = index[w]
                continue
            work.pop()
            if work:
                parent = work[-1][0]
                if low[v] < low[parent]:
                    low[parent] = low[v]
            if low[v] == index[v]:
                cid = len(members)
                comp = []
                while True:
                    w = stack.pop()
                    on_stack[w] = False
                    component[w] = cid
                    comp.append(w)
                    if w == v:
                        break
                comp.sort()
                members.append(comp)
    return SccLabeling(component, len(members), members)


def dfs_tree(g: Graph, root: int) -> PredecessorTree:
    """Depth-first search tree from ``root``; raises if some vertex is unreachable."""
    n = g.n
    adj = g.adjacency
    parent: PredecessorTree = [None] * n
    seen = [False] * n
    seen[root] = True
    found = 1
    work = [(root, 0)]
    while work:
        u, i = work[-1]
        nbrs = adj[u]
        if i == len(nbrs):
            work.pop()
            continue
        work[-1] = (u, i + 1)
        v = nbrs[i]
        if not seen[v]:
            seen[v] = True
            parent[v] = u
            found += 1
            work.append((v, 0))
    if found != n:
        raise NoSpanningTreeError(
            f"no DST exists: vertex {seen.index(False)} not reachable from {root}"
        )
    return parent


def dst_unrooted(g: Graph) -> tuple[int, PredecessorTree]:
    """Find a valid root in the unique source component and return its DFS tree."""
    _check_input(g)
    scc = tarjan_scc(g)
    comp = scc.component
    indeg = [0] * scc.count
    for u, nbrs in enumerate(g.adjacency):
        cu = comp[u]
        for v in nbrs:
            if comp[v] != cu:
                indeg[comp[v]] += 1
    sources = [c for c in range(scc.count) if indeg[c] == 0]
    if len(sources) != 1:
        raise NoSpanningTreeError(
            f"no DST exists: condensation has {len(sources)} source components"
        )
    root = scc.members[sources[0]][0]
    return root, dfs_tree(g, root)
