"""Command line: ``gen``, ``run``, ``bench`` and ``check``."""

from __future__ import annotations

import argparse
import logging
import sys
from pathlib import Path
from typing import Optional, Sequence

from . import adversarial
from .baselines import check_spanning_tree
from .bench import ALGORITHMS, BenchError, load_config, run_algorithm, run_benchmark
from .graph import EdgeRef, GraphError, gnp_random, read_graph, write_graph


def read_tree(path) -> list[EdgeRef]:
    """Tree files hold one ``u v`` edge per line; ``#`` starts a comment."""
    edges = []
    with open(path) as fh:
        for lineno, raw in enumerate(fh, start=1):
            parts = raw.split("#", 1)[0].split()
            if not parts:
                continue
            if len(parts) != 2:
                raise GraphError(f"{path}:{lineno}: expected 'u v'")
            edges.append(EdgeRef(int(parts[0]), int(parts[1])))
    return edges


def write_tree(edges: Sequence[EdgeRef], path) -> None:
    with open(path, "w") as fh:
        for e in edges:
            fh.write(f"{e.u} {e.v}\n")


def _normalize(g, edges):
    if g.directed:
        return edges
    return [EdgeRef.undirected(e.u, e.v) for e in edges]


def cmd_gen(args) -> int:
    if args.family == "gnp":
        if args.p is None:
            raise GraphError("gnp needs --p")
        g = gnp_random(args.n, args.p, args.seed, args.weighted, (args.wmin, args.wmax))
    else:
        gen = adversarial.GENERATORS[args.family]
        inst = gen(args.n, args.k) if args.family in ("clique-plus-path", "clique-path-rooted") else gen(args.n)
        g = inst.graph
        if inst.roles:
            roles = ", ".join(f"{k}={v}" for k, v in inst.roles.items())
            print(f"roles: {roles}", file=sys.stderr)
    write_graph(g, args.output)
    print(f"wrote {g!r} to {args.output}")
    return 0


def cmd_run(args) -> int:
    g = read_graph(args.graph)
    alg = ALGORITHMS[args.algo]
    kwargs = {"root": args.root} if args.algo == "enum-dst" else {}
    result = run_algorithm(alg, g, **kwargs)
    edges = _normalize(g, result.edges)
    root = args.root if args.algo == "enum-dst" else None
    report = check_spanning_tree(g, edges, root=root)
    m = result.metrics
    print(f"algorithm: {alg.name}")
    print(f"edges: {len(edges)} (n-1 = {g.n - 1})")
    print(f"validity: {'PASS' if report else 'FAIL'}" + ("" if report else f" ({report.reason})"))
    if report.total_weight is not None:
        print(f"total_weight: {report.total_weight}")
    print(f"first_output_ns: {m.first_output_ns}")
    print(f"max_delay_ns: {m.max_delay_ns}")
    print(f"delay_inc_max_ns: {m.max_incremental_delay_ns}")
    print(f"total_time_ns: {m.total_time_ns}")
    if args.emit_edges:
        for e in result.edges:
            print(f"{e.u} {e.v}")
    if args.tree_out:
        write_tree(edges, args.tree_out)
    return 0 if report else 1


def cmd_bench(args) -> int:
    config = load_config(args.config)
    if args.emit_edges:
        config.emit_edges = True
    paths = run_benchmark(config, Path(args.output) if args.output else None)
    for name, path in paths.items():
        print(f"{name}: {path}")
    return 0


def cmd_check(args) -> int:
    g = read_graph(args.graph)
    edges = _normalize(g, read_tree(args.tree))
    report = check_spanning_tree(g, edges, root=args.root)
    if report:
        weight = f", weight {report.total_weight}" if report.total_weight is not None else ""
        print(f"PASS: {report.edge_count} edges{weight}")
        return 0
    print(f"FAIL: {report.reason}")
    return 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="spanenum", description=__doc__)
    parser.add_argument("-v", "--verbose", action="store_true")
    sub = parser.add_subparsers(dest="command", required=True)

    gen = sub.add_parser("gen", help="write a random or adversarial graph")
    gen.add_argument("--family", default="gnp", choices=["gnp", *adversarial.GENERATORS])
    gen.add_argument("--n", type=int, required=True)
    gen.add_argument("--k", type=int, default=3, help="clique size for the clique/path families")
    gen.add_argument("--p", type=float)
    gen.add_argument("--seed", type=int, default=1)
    gen.add_argument("--weighted", action="store_true")
    gen.add_argument("--wmin", type=int, default=1)
    gen.add_argument("--wmax", type=int, default=65535)
    gen.add_argument("-o", "--output", required=True)
    gen.set_defaults(func=cmd_gen)

    run = sub.add_parser("run", help="run one algorithm on one graph")
    run.add_argument("--algo", required=True, choices=sorted(ALGORITHMS))
    run.add_argument("--graph", required=True)
    run.add_argument("--root", type=int, default=0, help="root for enum-dst")
    run.add_argument("--emit-edges", action="store_true", help="print edges in emission order")
    run.add_argument("--tree-out", help="write the tree to this file")
    run.set_defaults(func=cmd_run)

    bench = sub.add_parser("bench", help="run a benchmark config")
    bench.add_argument("--config", required=True)
    bench.add_argument("--output", help="output directory (overrides config and environment)")
    bench.add_argument("--emit-edges", action="store_true", help="log emission orders")
    bench.set_defaults(func=cmd_bench)

    check = sub.add_parser("check", help="validate a tree file against a graph file")
    check.add_argument("--graph", required=True)
    check.add_argument("--tree", required=True)
    check.add_argument("--root", type=int)
    check.set_defaults(func=cmd_check)
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING)
    try:
        return args.func(args)
    except (GraphError, BenchError, OSError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
