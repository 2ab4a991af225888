import csv
import io
import json
from pathlib import Path

import pytest

from turan_local.cli import main
from turan_local.enumeration import enumerate_graphs
from turan_local.graph6 import write_graph6

DATA = Path(__file__).parent / "data"
X_EDGES = "5 7\n0 1\n0 2\n1 4\n1 3\n2 4\n2 3\n4 3\n"


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


@pytest.fixture
def x_file(tmp_path):
    p = tmp_path / "x.txt"
    p.write_text(X_EDGES)
    return str(p)


def test_weights_edge_list(capsys, x_file):
    code, out, _ = run(capsys, "weights", "-i", x_file, "--format", "json")
    assert code == 0
    d = json.loads(out)
    assert d["c"] == [2, 3, 3, 3, 3] and d["omega"] == 3


def test_weights_y_and_k4(capsys):
    assert json.loads(run(capsys, "weights", "y", "--format", "json")[1])["c"] == [2, 2, 1]
    d = json.loads(run(capsys, "weights", "complete:4", "--format", "json")[1])
    assert d["c"] == [4] * 4 and {e["k"] for e in d["k"]} == {4}


def test_bound_table(capsys, x_file):
    code, out, _ = run(capsys, "bound", "-i", x_file)
    assert code == 0
    assert "m=7" in out and "bound 7, TIGHT" in out and "95/12 (≈ 7.91667)" in out
    out = run(capsys, "bound", "cycle:5")[1]
    assert "m=5" in out and "bound 6, slack 1" in out
    d = json.loads(run(capsys, "bound", "turan:12:9", "--format", "json")[1])
    assert d["m"] == 63 and d["vertex_local"]["floor"] == 64 and not d["vertex_local"]["tight"]


def test_bound_stdin(capsys, monkeypatch):
    monkeypatch.setattr("sys.stdin", io.StringIO(X_EDGES))
    assert json.loads(run(capsys, "bound", "-", "--format", "json")[1])["m"] == 7


def test_classify(capsys):
    code, out, _ = run(capsys, "classify", "turan:7:3")
    assert code == 0 and "TuranInS r=3 classes 3/2/2" in out
    assert "Paraglider" in run(capsys, "classify", "paraglider")[1]
    assert "NotExtremal" in run(capsys, "classify", "cycle:5")[1]
    d = json.loads(run(capsys, "classify", "edges:3:0-1", "--format", "json")[1])
    assert d["tag"] == "YGraph"


def test_uniform_inputs_give_same_answer(capsys, tmp_path):
    g6 = tmp_path / "t.g6"
    g6.write_text(write_graph6(__import__("turan_local").turan_graph(7, 3)) + "\n")
    from_gen = json.loads(run(capsys, "bound", "turan:7:3", "--format", "json")[1])
    from_file = json.loads(run(capsys, "bound", "-i", str(g6), "--format", "json")[1])
    from_arg = json.loads(run(capsys, "bound", from_gen["graph6"], "--format", "json")[1])
    assert from_gen == from_file == from_arg


def test_multi_graph_input(capsys, tmp_path):
    p = tmp_path / "all4.g6"
    p.write_text("".join(write_graph6(G) + "\n" for G in enumerate_graphs(4)))
    recs = json.loads(run(capsys, "classify", "-i", str(p), "--format", "json")[1])
    assert len(recs) == 11
    assert sum(r["tag"] != "NotExtremal" for r in recs) == 4


def test_input_errors(capsys, tmp_path):
    bad = tmp_path / "bad.txt"
    bad.write_text("3 1\n0 7\n")
    code, _, err = run(capsys, "bound", "-i", str(bad))
    assert code == 2 and "outside" in err
    code, _, err = run(capsys, "bound", "Bw!")
    assert code == 2 and "byte 2" in err
    code, _, err = run(capsys, "bound", "turan:3:5")
    assert code == 2
    assert run(capsys, "bound")[0] == 2
    bad.write_text("3 2\n0 1\n")
    assert run(capsys, "bound", "-i", str(bad))[0] == 2


def test_verify(capsys):
    code, out, err = run(capsys, "verify", "--n-max", "5", "--theorem", "main", "--format", "json")
    assert code == 0
    d = json.loads(out)
    assert d["summary"]["passed"]
    assert len(d["per_n"][-1]["extremal"]) == 6
    assert "PASSED" in err
    code, out, err = run(capsys, "verify", "--n-max", "3", "--theorem", "all")
    assert code == 0 and out == "" and "n=3: checked 4, violations 0, extremal classes 4, PASS" in err


def test_verify_graph6_file(capsys, tmp_path):
    p = tmp_path / "n6.g6"
    p.write_text("".join(write_graph6(G) + "\n" for G in enumerate_graphs(6)))
    code, out, err = run(capsys, "verify", "--graph6", str(p), "--theorem", "main", "--workers", "2", "--out", str(tmp_path / "r.json"))
    assert code == 0
    d = json.loads((tmp_path / "r.json").read_text())
    assert d["summary"]["checked"] == 156


def test_verify_failure_exit_code(capsys, tmp_path):
    p = tmp_path / "partial.g6"
    p.write_text("".join(write_graph6(G) + "\n" for G in enumerate_graphs(5) if G.m != 10))
    assert run(capsys, "verify", "--graph6", str(p), "--theorem", "main")[0] == 1


def test_verify_size_limit(capsys):
    code, _, err = run(capsys, "verify", "--n-max", "9")
    assert code == 3 and "graph6" in err


def test_workers_env(monkeypatch):
    from turan_local.cli import build_parser

    monkeypatch.setenv("TURAN_LOCAL_WORKERS", "3")
    assert build_parser().parse_args(["verify"]).workers == 3


def test_compare_trivial_cases(capsys):
    code, out, _ = run(capsys, "compare", "--n", "10", "--p", "0", "--count", "5")
    rows = list(csv.DictReader(io.StringIO(out)))
    assert code == 0 and len(rows) == 5
    assert all(r["m"] == "0" and r["vertex_gap"] == "0" and r["vertex_local_floor"] == "0" for r in rows)
    rows = list(csv.DictReader(io.StringIO(run(capsys, "compare", "--n", "10", "--p", "1", "--count", "3")[1])))
    assert all(r["m"] == "45" and r["vertex_gap"] == "0" and r["classical_gap"] == "0" for r in rows)
    assert all(r["edge_local_slack"] == "0/1" for r in rows)


def test_compare_golden(capsys):
    code, out, err = run(capsys, "compare", "--n", "12", "--p", "0.5", "--count", "100", "--seed", "0")
    assert code == 0
    assert out == (DATA / "compare_n12_p0.5_c100_s0.csv").read_text()
    rows = list(csv.DictReader(io.StringIO(out)))
    assert all(int(r["vertex_local_floor"]) <= int(r["classical_floor"]) for r in rows)
    assert "vertex_gap: min 14 q1 18.0 median 19.0 q3 21.0 max 24" in err


def test_compare_bad_probability(capsys):
    assert run(capsys, "compare", "--n", "5", "--p", "1.5")[0] == 2
