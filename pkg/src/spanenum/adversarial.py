"""Worst-case graph families from the lower-bound constructions.

Each generator commits to one concrete member of its family. Adjacency
lists are ordered the way an adversary would answer neighbor queries:
edges that stay inside the dense part come first, the informative edges
(bridges, the exit to the path, edges to the root) last.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations

from .graph import Graph, GraphError


@dataclass
class AdversarialInstance:
    graph: Graph
    roles: dict[str, int] = field(default_factory=dict)
    facts: dict = field(default_factory=dict)


def _bidirect(g: Graph, u: int, v: int, w=None) -> None:
    g.add_edge(u, v, w)
    g.add_edge(v, u, w)


def two_cliques_bridge(n: int) -> AdversarialInstance:
    """Two near-cliques joined by two bridge edges.

    Sides hold ``ceil(n/2)`` and ``floor(n/2)`` vertices. In each side the
    last two vertices miss their mutual edge and instead carry one bridge
    each, so every vertex of a side has the same degree.
    """
    if n < 6:
        raise GraphError(f"two_cliques_bridge needs n >= 6, got {n}")
    a = (n + 1) // 2
    side_a = list(range(a))
    side_b = list(range(a, n))
    a2, a3 = side_a[-2], side_a[-1]
    b2, b3 = side_b[-2], side_b[-1]
    g = Graph(n)
    for side, (x, y) in ((side_a, (a2, a3)), (side_b, (b2, b3))):
        for u, v in combinations(side, 2):
            if (u, v) != (x, y):
                g.add_edge(u, v)
    g.add_edge(a2, b2)
    g.add_edge(a3, b3)
    b = n - a
    return AdversarialInstance(
        g,
        {"a2": a2, "a3": a3, "b2": b2, "b3": b3},
        {
            "bridges": [(a2, b2), (a3, b3)],
            "edge_count": a * (a - 1) // 2 - 1 + b * (b - 1) // 2 - 1 + 2,
        },
    )


def clique_plus_path(n: int, k: int) -> AdversarialInstance:
    """Weight-2 clique on ``0..k-1`` hanging off the first vertex of a weight-1 path.

    Every clique vertex is joined to the path start ``p1 = k`` with weight 1,
    so the unique MST is the set of all weight-1 edges.
    """
    if not 3 <= k <= n - 1:
        raise GraphError(f"clique_plus_path needs 3 <= k <= n-1, got n={n}, k={k}")
    g = Graph(n, weighted=True)
    for u, v in combinations(range(k), 2):
        g.add_edge(u, v, 2)
    p1 = k
    for c in range(k):
        g.add_edge(c, p1, 1)
    for p in range(k, n - 1):
        g.add_edge(p, p + 1, 1)
    mst = [(c, p1) for c in range(k)] + [(p, p + 1) for p in range(k, n - 1)]
    return AdversarialInstance(
        g,
        {"p1": p1, "path_end": n - 1},
        {
            "mst_edges": mst,
            "mst_weight": n - 1,
            "edge_count": k * (k - 1) // 2 + k + (n - k - 1),
        },
    )


def directed_two_cliques(n: int) -> AdversarialInstance:
    """Two bi-directed cliques; ``s, t`` in the first miss their mutual arcs
    and each send one arc to ``v``, the first vertex of the second clique.

    The first clique (``floor(n/2)`` vertices) is the unique source component,
    and every DST enters the second clique through exactly one of ``(s, v)``
    and ``(t, v)``.
    """
    if n < 6:
        raise GraphError(f"directed_two_cliques needs n >= 6, got {n}")
    h = n // 2
    first = list(range(h))
    second = list(range(h, n))
    s, t = first[-2], first[-1]
    v = second[0]
    g = Graph(n, directed=True)
    for x, y in combinations(first, 2):
        if (x, y) != (s, t):
            _bidirect(g, x, y)
    for x, y in combinations(second, 2):
        _bidirect(g, x, y)
    g.add_edge(s, v)
    g.add_edge(t, v)
    k = n - h
    return AdversarialInstance(
        g,
        {"s": s, "t": t, "v": v},
        {"crossing": [(s, v), (t, v)], "edge_count": h * (h - 1) + k * (k - 1)},
    )


def clique_path_rooted(n: int, k: int) -> AdversarialInstance:
    """Bi-directed ``k``-clique with root ``r = 0`` and a bi-directed path.

    The clique vertex ``c = k-1`` has no arcs to or from ``r``; instead it
    is joined in both directions to the path end ``p = k``. Arcs into ``r``
    and the arc from ``c`` to the path come last in their adjacency lists.
    """
    if not 3 <= k <= n - 1:
        raise GraphError(f"clique_path_rooted needs 3 <= k <= n-1, got n={n}, k={k}")
    r, c, p = 0, k - 1, k
    g = Graph(n, directed=True)
    for u in range(k):
        for x in range(1, k):  # arcs not pointing at r
            if x != u and {u, x} != {r, c}:
                g.add_edge(u, x)
        if u != r and u != c:
            g.add_edge(u, r)
        if u == c:
            g.add_edge(c, p)
    g.add_edge(p, c)
    for q in range(k, n - 1):
        _bidirect(g, q, q + 1)
    return AdversarialInstance(
        g,
        {"r": r, "c": c, "p": p},
        {
            "exit_edge": (c, p),
            "max_out_degree": k - 1,
            "edge_count": k * (k - 1) + 2 * (n - k - 1),
        },
    )


def weighted_bidirected_clique(n: int) -> AdversarialInstance:
    """Bi-directed clique with weight 2 everywhere except one weight-1 arc ``(w, v)``.

    Vertices split into groups of ``ceil(n/2)`` and ``floor(n/2)``; each
    adjacency list names its own group before the other. ``v = 0`` and
    ``w`` is the last vertex of the second group.
    """
    if n < 4:
        raise GraphError(f"weighted_bidirected_clique needs n >= 4, got n={n}")
    split = (n + 1) // 2
    groups = [list(range(split)), list(range(split, n))]
    v, w = 0, n - 1
    g = Graph(n, directed=True, weighted=True)
    for own, other in (groups, groups[::-1]):
        for x in own:
            for y in own + other:
                if y != x:
                    g.add_edge(x, y, 1 if (x, y) == (w, v) else 2)
    return AdversarialInstance(
        g,
        {"v": v, "w": w},
        {"light_edge": (w, v), "edge_count": n * (n - 1)},
    )


GENERATORS = {
    "two-cliques-bridge": two_cliques_bridge,
    "clique-plus-path": clique_plus_path,
    "directed-two-cliques": directed_two_cliques,
    "clique-path-rooted": clique_path_rooted,
    "weighted-bidirected-clique": weighted_bidirected_clique,
}
