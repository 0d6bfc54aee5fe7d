"""Benchmark harness: G(n, p) instances, timed runs, aggregated CSV output.

Samples from all instances and runs of one size are pooled before
averaging. Timing covers only the algorithm call; generation and tree
validation happen outside the timed region.
"""

from __future__ import annotations

import csv
import gc
import logging
import math
import os
from dataclasses import dataclass, field
from pathlib import Path
from typing import Callable, Optional

import numpy as np

from . import baselines, dst, mst_enum, st_enum
from .baselines import check_spanning_tree, parents_to_edges
from .graph import EdgeRef, Graph, gnp_random
from .stream import CollectingSink, StreamMetrics, bulk_metrics, clock_ns, metrics_from_timestamps

log = logging.getLogger(__name__)

OUTPUT_DIR_ENV = "SPANENUM_OUTPUT_DIR"

CSV_HEADER = [
    "size",
    "first_output_avg",
    "first_output_lower_quartile",
    "first_output_upper_quartile",
    "delay_inc_max_avg",
    "delay_inc_max_lower_quartile",
    "delay_inc_max_upper_quartile",
    "total_time_avg",
    "total_time_lower_quartile",
    "total_time_upper_quartile",
]


class BenchError(RuntimeError):
    pass


@dataclass(frozen=True)
class Algorithm:
    name: str
    kind: str  # "enum" emits through a sink, "total" returns its tree at the end
    run: Callable
    graph_kind: str = "weighted"  # weighted | unweighted | directed


def _mst_enum(variant, blackbox):
    def run(g, sink):
        variant(g, blackbox, sink)

    return run


def _edges_from_parents(fn):
    def run(g):
        return parents_to_edges(fn(g))

    return run


ALGORITHMS: dict[str, Algorithm] = {}


def _register(alg: Algorithm) -> None:
    ALGORITHMS[alg.name] = alg


for _bb in ("prim", "kruskal", "boruvka"):
    _register(Algorithm(f"enum-{_bb}", "enum", _mst_enum(mst_enum.enumerate_mst_degree_sorted, _bb)))
    _register(Algorithm(f"enum-maxdeg-{_bb}", "enum", _mst_enum(mst_enum.enumerate_mst, _bb)))
_register(Algorithm("total-prim", "total", _edges_from_parents(baselines.prim)))
_register(Algorithm("total-kruskal", "total", baselines.kruskal))
_register(Algorithm("total-boruvka", "total", baselines.boruvka))
_register(Algorithm("incremental-prim", "enum", baselines.incremental_prim))
_register(Algorithm("enum-st", "enum", st_enum.enumerate_st, "unweighted"))
_register(
    Algorithm("enum-dst", "enum", lambda g, sink, root=0: dst.enumerate_dst_rooted(g, root, sink), "directed")
)
_register(
    Algorithm(
        "dst-unrooted",
        "total",
        lambda g: [EdgeRef(u, v) for v, u in enumerate(dst.dst_unrooted(g)[1]) if u is not None],
        "directed",
    )
)


@dataclass
class RunResult:
    edges: list[EdgeRef]
    metrics: StreamMetrics
    timestamps: Optional[list[int]] = None


def run_algorithm(alg: Algorithm | str, g: Graph, **kwargs) -> RunResult:
    """One timed run. Total-time algorithms report every metric as their total time.

    The cyclic garbage collector is paused for the timed region (as ``timeit``
    does) so that collections triggered by earlier runs do not land inside it.
    """
    if isinstance(alg, str):
        alg = ALGORITHMS[alg]
    gc.collect()
    was_enabled = gc.isenabled()
    gc.disable()
    try:
        return _timed(alg, g, kwargs)
    finally:
        if was_enabled:
            gc.enable()


def _timed(alg: Algorithm, g: Graph, kwargs: dict) -> RunResult:
    if alg.kind == "enum":
        sink = CollectingSink()
        sink.start()
        alg.run(g, sink, **kwargs)
        total = clock_ns() - sink.t0
        stamps = sink.offsets()
        if not stamps:  # single-vertex graph
            return RunResult([], bulk_metrics(total, 0), [])
        return RunResult(sink.edges, metrics_from_timestamps(stamps, total), stamps)
    start = clock_ns()
    edges = alg.run(g, **kwargs)
    total = clock_ns() - start
    return RunResult(list(edges), bulk_metrics(total, len(edges)))


@dataclass
class BenchConfig:
    sizes: list[int]
    p: str = "0.25"  # a probability, or "n^-e" for p = n**(-e)
    instances_per_size: int = 10
    runs_per_instance: int = 5
    algorithms: list[str] = field(default_factory=lambda: ["enum-prim", "incremental-prim"])
    seed: int = 1
    output: str = "bench-out"
    weight_min: int = 1
    weight_max: int = 65535
    emit_edges: bool = False

    def __post_init__(self) -> None:
        if not self.sizes or any(n < 1 for n in self.sizes):
            raise BenchError(f"sizes must be a nonempty list of positive ints: {self.sizes}")
        if self.instances_per_size < 1 or self.runs_per_instance < 1:
            raise BenchError("instances_per_size and runs_per_instance must be >= 1")
        unknown = [a for a in self.algorithms if a not in ALGORITHMS]
        if unknown:
            raise BenchError(f"unknown algorithms: {', '.join(unknown)}")
        for n in self.sizes:
            self.edge_probability(n)

    def edge_probability(self, n: int) -> float:
        text = self.p.replace(" ", "")
        if text.startswith("n^"):
            p = float(n) ** float(text[2:])
        else:
            p = float(text)
        if not 0 < p <= 1:
            raise BenchError(f"edge probability {p} for n={n} outside (0, 1]")
        return p


_INT_KEYS = {"instances_per_size", "runs_per_instance", "seed", "weight_min", "weight_max"}
_KEY_ALIASES = {"instances": "instances_per_size", "runs": "runs_per_instance"}


def parse_config(text: str) -> BenchConfig:
    """Flat ``key = value`` lines; ``#`` starts a comment; lists are comma-separated."""
    values: dict = {}
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if "=" not in line:
            raise BenchError(f"config line {lineno}: expected key = value")
        key, value = (s.strip() for s in line.split("=", 1))
        key = _KEY_ALIASES.get(key, key)
        if key == "sizes":
            values[key] = [int(x) for x in value.split(",") if x.strip()]
        elif key == "algorithms":
            values[key] = [x.strip() for x in value.split(",") if x.strip()]
        elif key in _INT_KEYS:
            values[key] = int(value)
        elif key == "emit_edges":
            values[key] = value.lower() in ("1", "true", "yes")
        elif key in ("p", "output"):
            values[key] = value
        else:
            raise BenchError(f"config line {lineno}: unknown key {key!r}")
    if "sizes" not in values:
        raise BenchError("config needs a 'sizes' entry")
    return BenchConfig(**values)


def load_config(path) -> BenchConfig:
    with open(path) as fh:
        return parse_config(fh.read())


def quartiles(samples: list[int]) -> tuple[int, int]:
    """Nearest-rank lower and upper quartiles."""
    if not samples:
        raise ValueError("quartiles of an empty sample")
    s = sorted(samples)
    n = len(s)
    return s[math.ceil(0.25 * n) - 1], s[math.ceil(0.75 * n) - 1]


def instance_seed(seed: int, size: int, index: int) -> int:
    return int(np.random.SeedSequence([seed, size, index]).generate_state(1, np.uint64)[0])


def csv_path(output: Path, p: str, algorithm: str) -> Path:
    return output / f"aggregated_{p}.{algorithm}.csv"


def _aggregate(size: int, samples: list[StreamMetrics]) -> list[int]:
    row = [size]
    for attr in ("first_output_ns", "max_incremental_delay_ns", "total_time_ns"):
        vals = [getattr(m, attr) for m in samples]
        lo, hi = quartiles(vals)
        row += [round(sum(vals) / len(vals)), lo, hi]
    return row


def run_benchmark(
    config: BenchConfig,
    output: Optional[Path] = None,
    observer: Optional[Callable[[str, int, RunResult], None]] = None,
) -> dict[str, Path]:
    """Run every configured algorithm on every instance and write one CSV per algorithm.

    ``observer(name, size, result)`` sees every timed run, warm-ups included.
    """
    out = Path(output or os.environ.get(OUTPUT_DIR_ENV) or config.output)
    out.mkdir(parents=True, exist_ok=True)
    rows: dict[str, list[list[int]]] = {a: [] for a in config.algorithms}
    edge_log = open(out / f"edges_{config.p}.txt", "w") if config.emit_edges else None
    try:
        for size in config.sizes:
            p = config.edge_probability(size)
            samples: dict[str, list[StreamMetrics]] = {a: [] for a in config.algorithms}
            for idx in range(config.instances_per_size):
                g = gnp_random(
                    size,
                    p,
                    instance_seed(config.seed, size, idx),
                    weighted=True,
                    weight_range=(config.weight_min, config.weight_max),
                )
                for name in config.algorithms:
                    alg = ALGORITHMS[name]
                    if alg.graph_kind != "weighted":
                        raise BenchError(f"{name} does not run on weighted G(n, p) instances")
                    for rep in range(config.runs_per_instance):
                        result = run_algorithm(alg, g)
                        report = check_spanning_tree(g, result.edges)
                        if not report:
                            raise BenchError(
                                f"{name} produced an invalid tree on n={size} instance {idx}: {report.reason}"
                            )
                        if observer is not None:
                            observer(name, size, result)
                        if edge_log is not None:
                            order = " ".join(f"{e.u}-{e.v}" for e in result.edges)
                            edge_log.write(f"{name} n={size} instance={idx} run={rep}: {order}\n")
                        if config.runs_per_instance >= 3 and rep == 0:
                            continue  # warm-up
                        samples[name].append(result.metrics)
                log.info("n=%d instance %d done", size, idx)
                del g
            for name in config.algorithms:
                rows[name].append(_aggregate(size, samples[name]))
    finally:
        if edge_log is not None:
            edge_log.close()
    paths = {}
    for name, table in rows.items():
        path = csv_path(out, config.p, name)
        with open(path, "w", newline="") as fh:
            writer = csv.writer(fh)
            writer.writerow(CSV_HEADER)
            writer.writerows(table)
        paths[name] = path
    return paths


def read_aggregated(path) -> list[dict[str, int]]:
    with open(path, newline="") as fh:
        reader = csv.DictReader(fh)
        if reader.fieldnames != CSV_HEADER:
            raise BenchError(f"{path}: unexpected header {reader.fieldnames}")
        return [{k: int(v) for k, v in row.items()} for row in reader]
