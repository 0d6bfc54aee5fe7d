import subprocess
import sys

import pytest

from spanenum.cli import main, read_tree, write_tree
from spanenum.graph import EdgeRef, GraphError, read_graph


@pytest.fixture
def path3(tmp_path):
    p = tmp_path / "path3.txt"
    p.write_text("3 2 0 1\n0 1 4\n1 2 6\n")
    return p


def test_run_reports_validity_and_metrics(path3, capsys):
    assert main(["run", "--algo", "enum-prim", "--graph", str(path3), "--emit-edges"]) == 0
    out = capsys.readouterr().out
    assert "validity: PASS" in out and "total_weight: 10" in out
    assert "delay_inc_max_ns:" in out
    assert out.rstrip().splitlines()[-2:] == ["0 1", "1 2"]


def test_run_writes_tree_that_check_accepts(path3, tmp_path, capsys):
    tree = tmp_path / "t.txt"
    assert main(["run", "--algo", "total-boruvka", "--graph", str(path3), "--tree-out", str(tree)]) == 0
    assert main(["check", "--graph", str(path3), "--tree", str(tree)]) == 0
    assert "PASS: 2 edges, weight 10" in capsys.readouterr().out


def test_check_rejects_tampered_tree(path3, tmp_path, capsys):
    tree = tmp_path / "t.txt"
    tree.write_text("# tampered\n0 1\n0 2\n")
    assert main(["check", "--graph", str(path3), "--tree", str(tree)]) == 1
    assert "FAIL: missing edge (0, 2)" in capsys.readouterr().out


def test_gen_then_run_directed(tmp_path, capsys):
    g = tmp_path / "d.txt"
    assert main(["gen", "--family", "clique-path-rooted", "--n", "12", "--k", "4", "-o", str(g)]) == 0
    assert read_graph(g).directed
    assert main(["run", "--algo", "enum-dst", "--graph", str(g), "--root", "0"]) == 0
    assert "validity: PASS" in capsys.readouterr().out


def test_gen_gnp_requires_p(tmp_path, capsys):
    assert main(["gen", "--n", "5", "-o", str(tmp_path / "g.txt")]) == 1
    assert "needs --p" in capsys.readouterr().err


def test_gen_gnp_weighted_round_trip(tmp_path):
    out = tmp_path / "g.txt"
    assert main(["gen", "--n", "20", "--p", "0.3", "--weighted", "--wmax", "9", "-o", str(out)]) == 0
    g = read_graph(out)
    assert g.weighted and all(1 <= w <= 9 for ws in g.adjacency_weights for w in ws)


def test_run_deterministic_emission(tmp_path, capsys):
    g = tmp_path / "g.txt"
    main(["gen", "--n", "25", "--p", "0.3", "--weighted", "--seed", "3", "-o", str(g)])
    capsys.readouterr()
    outs = []
    for _ in range(2):
        main(["run", "--algo", "enum-boruvka", "--graph", str(g), "--emit-edges"])
        outs.append([ln for ln in capsys.readouterr().out.splitlines() if ln[0].isdigit()])
    assert outs[0] == outs[1] and len(outs[0]) == 24


def test_missing_graph_file_exits_1(tmp_path, capsys):
    assert main(["run", "--algo", "enum-prim", "--graph", str(tmp_path / "nope")]) == 1
    assert capsys.readouterr().err.startswith("error:")


def test_unknown_subcommand_exits_2():
    with pytest.raises(SystemExit) as exc:
        main(["frobnicate"])
    assert exc.value.code == 2


def test_tree_file_round_trip(tmp_path):
    p = tmp_path / "t"
    write_tree([EdgeRef(0, 1), EdgeRef(2, 1)], p)
    assert read_tree(p) == [EdgeRef(0, 1), EdgeRef(2, 1)]
    p.write_text("0 1 2\n")
    with pytest.raises(GraphError):
        read_tree(p)


def test_module_entry_point(path3):
    proc = subprocess.run(
        [sys.executable, "-m", "spanenum", "check", "--graph", str(path3), "--tree", "/dev/null"],
        capture_output=True,
        text=True,
    )
    assert proc.returncode == 1 and "FAIL: count" in proc.stdout
