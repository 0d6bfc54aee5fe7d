"""Shared graph builders, hypothesis strategies and the acceptance report."""

from __future__ import annotations

import random
from contextlib import contextmanager

import pytest
from hypothesis import strategies as st

from spanenum.graph import Graph, gnp_random, graph_from_edges

ACCEPTANCE_CRITERIA = range(1, 11)
_acceptance: dict[int, tuple[str, str]] = {}


@contextmanager
def criterion(number: int, detail: str = ""):
    """Record PASS/FAIL for one acceptance criterion around the checking code.

    The body may yield a mutable dict to attach a detail string or a WARN
    status (``info["status"] = "WARN"``).
    """
    info = {"detail": detail, "status": "PASS"}
    try:
        yield info
    except BaseException as exc:
        _acceptance[number] = ("FAIL", f"{type(exc).__name__}: {str(exc).splitlines()[0] if str(exc) else ''}")
        raise
    _acceptance[number] = (info["status"], info["detail"])


def pytest_terminal_summary(terminalreporter):
    if not _acceptance:
        return
    terminalreporter.section("acceptance criteria")
    for k in ACCEPTANCE_CRITERIA:
        status, detail = _acceptance.get(k, ("NOT RUN", ""))
        terminalreporter.write_line(f"criterion {k:2d}: {status}" + (f"  {detail}" if detail else ""))


def shuffled_copy(edges, rng: random.Random):
    edges = list(edges)
    rng.shuffle(edges)
    return edges


def seeded_connected(n: int, p: float, seed: int, weights: str = "distinct") -> Graph:
    """Connected G(n, p) rebuilt in shuffled insertion order.

    ``weights`` is ``"distinct"`` (a random permutation), ``"ties"`` (values
    in 1..3) or ``"none"``.
    """
    base = gnp_random(n, p, seed)
    rng = random.Random(seed)
    edges = shuffled_copy(((e.u, e.v) if rng.random() < 0.5 else (e.v, e.u) for e in base.edges()), rng)
    if weights == "none":
        return graph_from_edges(n, edges)
    if weights == "distinct":
        ws = rng.sample(range(1, 4 * len(edges) + 1), len(edges))
    else:
        ws = [rng.randint(1, 3) for _ in edges]
    return graph_from_edges(n, [(u, v, w) for (u, v), w in zip(edges, ws)], weighted=True)


def seeded_digraph(n: int, seed: int, arc_p: float, rooted: bool) -> Graph:
    """Random digraph; with ``rooted`` every vertex is reachable from 0."""
    rng = random.Random(seed)
    arcs = set()
    if rooted:
        for v in range(1, n):
            arcs.add((rng.randrange(v), v))
    for u in range(n):
        for v in range(n):
            if u != v and rng.random() < arc_p:
                arcs.add((u, v))
    return graph_from_edges(n, shuffled_copy(sorted(arcs), rng), directed=True)


@st.composite
def connected_graphs(draw, min_n=1, max_n=12, weighted=True, weight_max=5):
    """Random connected simple graph: a random tree plus extra edges, shuffled."""
    n = draw(st.integers(min_n, max_n))
    pairs = set()
    for v in range(1, n):
        u = draw(st.integers(0, v - 1))
        pairs.add((u, v))
    all_pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    if all_pairs:
        pairs |= set(draw(st.lists(st.sampled_from(all_pairs), max_size=2 * n)))
    edges = draw(st.permutations(sorted(pairs)))
    flips = draw(st.lists(st.booleans(), min_size=len(edges), max_size=len(edges)))
    edges = [(v, u) if f else (u, v) for (u, v), f in zip(edges, flips)]
    if not weighted:
        return graph_from_edges(n, edges)
    ws = draw(st.lists(st.integers(1, weight_max), min_size=len(edges), max_size=len(edges)))
    return graph_from_edges(n, [(u, v, w) for (u, v), w in zip(edges, ws)], weighted=True)


@st.composite
def digraphs(draw, max_n=10):
    n = draw(st.integers(1, max_n))
    pairs = [(u, v) for u in range(n) for v in range(n) if u != v]
    arcs = draw(st.lists(st.sampled_from(pairs), unique=True, max_size=3 * n)) if pairs else []
    return graph_from_edges(n, arcs, directed=True)


@pytest.fixture
def triangle_w():
    return graph_from_edges(3, [(0, 1, 1), (1, 2, 2), (0, 2, 3)], weighted=True)
