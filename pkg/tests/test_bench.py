import pytest

from spanenum.adversarial import directed_two_cliques
from spanenum.baselines import check_spanning_tree
from spanenum.bench import (
    ALGORITHMS,
    CSV_HEADER,
    OUTPUT_DIR_ENV,
    BenchConfig,
    BenchError,
    instance_seed,
    parse_config,
    quartiles,
    read_aggregated,
    run_algorithm,
    run_benchmark,
)
from spanenum.graph import gnp_random
from spanenum.stream import availability_holds


@pytest.mark.parametrize(
    "samples, expected",
    [([1, 2, 3, 4], (1, 3)), ([5], (5, 5)), ([80, 10, 20, 30, 40, 50, 60, 70], (20, 60))],
)
def test_quartiles(samples, expected):
    assert quartiles(samples) == expected


def test_quartiles_empty():
    with pytest.raises(ValueError):
        quartiles([])


def test_parse_config_with_aliases_and_comments():
    cfg = parse_config(
        "# micro\nsizes = 10, 20\np = n^-0.5\ninstances = 2\nruns = 3\n"
        "algorithms = enum-prim, total-kruskal\nemit_edges = yes\n"
    )
    assert cfg.sizes == [10, 20] and cfg.instances_per_size == 2 and cfg.runs_per_instance == 3
    assert cfg.algorithms == ["enum-prim", "total-kruskal"] and cfg.emit_edges
    assert cfg.edge_probability(100) == pytest.approx(0.1)


@pytest.mark.parametrize(
    "text, msg",
    [
        ("p = 0.5\n", "sizes"),
        ("sizes = 5\nfoo = 1\n", "unknown key"),
        ("sizes = 5\nalgorithms = nope\n", "unknown algorithms"),
        ("sizes = 5\np = 2\n", "outside"),
        ("sizes = 5\nnonsense\n", "key = value"),
        ("sizes = 0\n", "positive"),
    ],
)
def test_parse_config_rejects(text, msg):
    with pytest.raises(BenchError, match=msg):
        parse_config(text)


def test_instance_seeds_differ():
    seeds = {instance_seed(1, n, i) for n in (10, 20) for i in range(5)}
    assert len(seeds) == 10 and instance_seed(1, 10, 0) == instance_seed(1, 10, 0)


@pytest.mark.parametrize("name", sorted(a for a, alg in ALGORITHMS.items() if alg.graph_kind == "weighted"))
def test_every_weighted_algorithm_yields_valid_tree(name):
    g = gnp_random(40, 0.2, seed=9, weighted=True)
    result = run_algorithm(name, g)
    report = check_spanning_tree(g, result.edges)
    assert report, report.reason
    if ALGORITHMS[name].kind == "enum":
        assert availability_holds(result.timestamps, result.metrics)
        assert result.metrics.first_output_ns <= result.metrics.total_time_ns


def test_unweighted_and_directed_algorithms():
    g = gnp_random(30, 0.2, seed=4)
    assert check_spanning_tree(g, run_algorithm("enum-st", g).edges)
    d = directed_two_cliques(10).graph
    assert check_spanning_tree(d, run_algorithm("dst-unrooted", d).edges)
    assert check_spanning_tree(d, run_algorithm("enum-dst", d, root=0).edges, root=0)


def test_run_benchmark_writes_one_csv_per_algorithm(tmp_path, monkeypatch):
    monkeypatch.setenv(OUTPUT_DIR_ENV, str(tmp_path / "env"))
    cfg = BenchConfig(sizes=[8, 16], instances_per_size=2, runs_per_instance=3,
                      algorithms=["enum-prim", "total-prim"], emit_edges=True)
    paths = run_benchmark(cfg)
    assert set(paths) == {"enum-prim", "total-prim"}
    assert paths["enum-prim"].name == "aggregated_0.25.enum-prim.csv"
    assert paths["enum-prim"].parent == tmp_path / "env"
    rows = read_aggregated(paths["total-prim"])
    assert [r["size"] for r in rows] == [8, 16]
    for r in rows:
        assert r["first_output_avg"] == r["total_time_avg"]
        assert r["first_output_lower_quartile"] <= r["first_output_upper_quartile"]
    log = (tmp_path / "env" / "edges_0.25.txt").read_text().splitlines()
    assert len(log) == 2 * 2 * 2 * 3


def test_emission_orders_are_deterministic(tmp_path):
    orders = []
    for sub in ("a", "b"):
        cfg = BenchConfig(sizes=[12], instances_per_size=2, runs_per_instance=1,
                          algorithms=["enum-kruskal", "incremental-prim"], emit_edges=True)
        run_benchmark(cfg, tmp_path / sub)
        orders.append((tmp_path / sub / "edges_0.25.txt").read_text())
    assert orders[0] == orders[1]


def test_non_weighted_algorithm_rejected_in_bench(tmp_path):
    cfg = BenchConfig(sizes=[8], instances_per_size=1, runs_per_instance=1, algorithms=["enum-st"])
    with pytest.raises(BenchError, match="enum-st"):
        run_benchmark(cfg, tmp_path)


def test_read_aggregated_checks_header(tmp_path):
    bad = tmp_path / "x.csv"
    bad.write_text("size,foo\n1,2\n")
    with pytest.raises(BenchError):
        read_aggregated(bad)
    assert len(CSV_HEADER) == 10
