"""Total-time MST algorithms, incremental Prim and correctness oracles.

All algorithms order edges through a key function ``key(u, v, w)``. The
default key is ``(w, min(u, v), max(u, v))``: weight first, then the
canonical edge id, so equal weights still give one reproducible tree.
The enumeration module passes its own key to run the same code on the
modified comparison order.
"""

from __future__ import annotations

import heapq
from dataclasses import dataclass
from itertools import combinations
from typing import Callable, Iterable, Optional

from .graph import DisconnectedGraphError, EdgeRef, Graph, GraphError
from .stream import EmissionSink

EdgeKey = Callable[[int, int, int], tuple]
PredecessorTree = list  # T[v] = parent id, None at the root

BRUTE_FORCE_MAX_N = 8


def weight_key(u: int, v: int, w: int) -> tuple:
    if u < v:
        return (w, u, v)
    return (w, v, u)


class UnionFind:
    """Disjoint sets over ``0..n-1`` with union by rank and path halving."""

    __slots__ = ("parent", "rank", "components")

    def __init__(self, n: int):
        self.parent = list(range(n))
        self.rank = [0] * n
        self.components = n

    def find(self, x: int) -> int:
        parent = self.parent
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    def union(self, a: int, b: int) -> bool:
        """Merge the sets of ``a`` and ``b``; False if they were already one set."""
        ra, rb = self.find(a), self.find(b)
        if ra == rb:
            return False
        rank = self.rank
        if rank[ra] < rank[rb]:
            ra, rb = rb, ra
        self.parent[rb] = ra
        if rank[ra] == rank[rb]:
            rank[ra] += 1
        self.components -= 1
        return True


def _require_weighted_undirected(g: Graph, what: str) -> None:
    if g.directed or not g.weighted:
        raise GraphError(f"{what} needs an undirected weighted graph, got {g!r}")


def _prim(g: Graph, key: EdgeKey, sink: Optional[EmissionSink]) -> PredecessorTree:
    _require_weighted_undirected(g, "Prim")
    n = g.n
    adj = g.adjacency
    wts = g.adjacency_weights
    parent: PredecessorTree = [None] * n
    visited = [False] * n
    visited[0] = True
    heap: list = []
    push, pop = heapq.heappush, heapq.heappop
    for v, w in zip(adj[0], wts[0]):
        push(heap, (key(0, v, w), v, 0))
    fixed = 1
    while heap and fixed < n:
        _, v, u = pop(heap)
        if visited[v]:
            continue
        visited[v] = True
        parent[v] = u
        fixed += 1
        if sink is not None:
            sink.accept(EdgeRef(u, v) if u < v else EdgeRef(v, u))
        for x, w in zip(adj[v], wts[v]):
            if not visited[x]:
                push(heap, (key(v, x, w), x, v))
    if fixed < n:
        raise DisconnectedGraphError(f"Prim reached only {fixed} of {n} vertices from 0")
    return parent


def prim(g: Graph, key: EdgeKey = weight_key) -> PredecessorTree:
    """MST rooted at 0 via a binary heap with lazy insertion and a visited check."""
    return _prim(g, key, None)


def incremental_prim(g: Graph, sink: EmissionSink, key: EdgeKey = weight_key) -> PredecessorTree:
    """Prim's algorithm emitting every tree edge at the moment it is fixed."""
    return _prim(g, key, sink)


def kruskal(g: Graph, key: EdgeKey = weight_key) -> list[EdgeRef]:
    _require_weighted_undirected(g, "Kruskal")
    edges = sorted(g.edges(), key=lambda e: key(e.u, e.v, e.weight))
    uf = UnionFind(g.n)
    tree: list[EdgeRef] = []
    target = g.n - 1
    for e in edges:
        if len(tree) == target:
            break
        if uf.union(e.u, e.v):
            tree.append(e)
    if len(tree) < target:
        raise DisconnectedGraphError(f"Kruskal found {len(tree)} of {target} tree edges")
    return tree


def boruvka(g: Graph, key: EdgeKey = weight_key) -> list[EdgeRef]:
    """Borůvka rounds with union-find merging instead of contraction.

    Keys are unique per edge (they end in the canonical edge id), so every
    component's cheapest outgoing edge is well defined and no round can
    close a cycle even with equal weights.
    """
    _require_weighted_undirected(g, "Borůvka")
    n = g.n
    edges = [(key(e.u, e.v, e.weight), e) for e in g.edges()]
    uf = UnionFind(n)
    tree: list[EdgeRef] = []
    find = uf.find
    while uf.components > 1:
        cheapest: dict[int, tuple] = {}
        for item in edges:
            e = item[1]
            ru, rv = find(e.u), find(e.v)
            if ru == rv:
                continue
            for r in (ru, rv):
                best = cheapest.get(r)
                if best is None or item[0] < best[0]:
                    cheapest[r] = item
        if not cheapest:
            raise DisconnectedGraphError(
                f"Borůvka stalled with {uf.components} components left"
            )
        for _, e in cheapest.values():
            if uf.union(e.u, e.v):
                tree.append(e)
        # drop edges that became internal
        edges = [item for item in edges if find(item[1].u) != find(item[1].v)]
    return tree


def edges_to_parents(n: int, edges: Iterable[EdgeRef], root: int = 0) -> PredecessorTree:
    """Root an undirected tree given as an edge set by DFS from ``root``."""
    nbrs: list[list[int]] = [[] for _ in range(n)]
    for e in edges:
        nbrs[e.u].append(e.v)
        nbrs[e.v].append(e.u)
    parent: PredecessorTree = [None] * n
    seen = [False] * n
    seen[root] = True
    stack = [root]
    reached = 1
    while stack:
        u = stack.pop()
        for v in nbrs[u]:
            if not seen[v]:
                seen[v] = True
                parent[v] = u
                reached += 1
                stack.append(v)
    if reached != n:
        raise GraphError(f"edge set does not span: reached {reached} of {n} vertices")
    return parent


def parents_to_edges(parent: PredecessorTree) -> list[EdgeRef]:
    return [EdgeRef.undirected(u, v) for v, u in enumerate(parent) if u is not None]


# Black-box MST adapters: (graph, key) -> predecessor tree.


def prim_blackbox(g: Graph, key: EdgeKey) -> PredecessorTree:
    return prim(g, key)


def kruskal_blackbox(g: Graph, key: EdgeKey) -> PredecessorTree:
    return edges_to_parents(g.n, kruskal(g, key))


def boruvka_blackbox(g: Graph, key: EdgeKey) -> PredecessorTree:
    return edges_to_parents(g.n, boruvka(g, key))


BLACKBOXES = {
    "prim": prim_blackbox,
    "kruskal": kruskal_blackbox,
    "boruvka": boruvka_blackbox,
}


def tree_weight(g: Graph, edges: Iterable[EdgeRef]) -> int:
    return sum(g.edge_weight(e.u, e.v) for e in edges)


def brute_force_mst_weight(g: Graph) -> int:
    """Minimum weight over all (n-1)-edge subsets that form a spanning tree."""
    _require_weighted_undirected(g, "brute force")
    if g.n > BRUTE_FORCE_MAX_N:
        raise GraphError(f"brute force limited to n <= {BRUTE_FORCE_MAX_N}, got n={g.n}")
    edges = list(g.edges())
    if g.n == 1:
        return 0
    best = None
    for subset in combinations(edges, g.n - 1):
        uf = UnionFind(g.n)
        if all(uf.union(e.u, e.v) for e in subset):
            w = sum(e.weight for e in subset)
            if best is None or w < best:
                best = w
    if best is None:
        raise DisconnectedGraphError("graph has no spanning tree")
    return best


@dataclass
class TreeCheckReport:
    is_spanning_tree: bool
    edge_count: int
    total_weight: Optional[int] = None
    reason: Optional[str] = None

    def __bool__(self) -> bool:
        return self.is_spanning_tree


def check_spanning_tree(
    g: Graph, edges: Iterable[EdgeRef], root: Optional[int] = None
) -> TreeCheckReport:
    """Validate an edge set as a spanning tree of ``g``.

    Undirected graphs: every edge exists, n-1 edges, no cycle, connected.
    Directed graphs additionally need in-degree 1 everywhere except the root
    and reachability of every vertex from the root along tree edges.
    """
    edges = list(edges)
    n = g.n
    count = len(edges)

    def fail(reason: str) -> TreeCheckReport:
        return TreeCheckReport(False, count, None, reason)

    adj = g.adjacency
    pairs = []
    for e in edges:
        u, v = e.u, e.v
        if not (0 <= u < n and 0 <= v < n) or v not in adj[u]:
            return fail(f"missing edge ({u}, {v})")
        pairs.append((u, v) if g.directed or u < v else (v, u))
    if len(set(pairs)) != count:
        return fail("duplicate")
    if count != n - 1:
        return fail(f"count: {count} edges, expected {n - 1}")
    uf = UnionFind(n)
    for u, v in pairs:
        if not uf.union(u, v):
            return fail("cycle")
    if uf.components != 1:
        return fail("disconnected")
    weight = None
    if g.weighted:
        wts = g.adjacency_weights
        weight = sum(wts[u][adj[u].index(v)] for u, v in pairs)
    if g.directed:
        indeg = [0] * n
        children: list[list[int]] = [[] for _ in range(n)]
        for u, v in pairs:
            indeg[v] += 1
            children[u].append(v)
        if any(d > 1 for d in indeg):
            return fail("in-degree")
        roots = [v for v in range(n) if indeg[v] == 0]
        if len(roots) != 1 or (root is not None and roots[0] != root):
            return fail(f"root: in-degree-0 vertices {roots[:5]}, expected {root}")
        seen = [False] * n
        seen[roots[0]] = True
        stack = [roots[0]]
        reached = 1
        while stack:
            u = stack.pop()
            for v in children[u]:
                if not seen[v]:
                    seen[v] = True
                    reached += 1
                    stack.append(v)
        if reached != n:
            return fail("unreachable")
    elif root is not None and not 0 <= root < n:
        return fail(f"root {root} out of range")
    return TreeCheckReport(True, count, weight, None)
