from fractions import Fraction

import pytest

import turan_local.verify as verify_mod
from turan_local.bounds import edge_localized_check
from turan_local.clique import edge_clique_weights
from turan_local.enumeration import enumerate_graphs
from turan_local.errors import SizeLimitError
from turan_local.extremal import turan_graph
from turan_local.graph import PARAGLIDER, Y_GRAPH
from turan_local.graph6 import parse_graph6, write_graph6
from turan_local.verify import canonical_g6, check_graph, expected_tight_sets, verify_theorems


def test_main_at_three():
    rep = verify_theorems(3, ["main"], n_min=3)
    assert rep.passed
    assert rep.graphs_checked == {3: 4}
    expected = {canonical_g6(turan_graph(3, r)) for r in (1, 2, 3)} | {canonical_g6(Y_GRAPH)}
    assert set(rep.extremal_found[3]) == expected == {canonical_g6(G) for G in enumerate_graphs(3)}


def test_main_at_five():
    rep = verify_theorems(5, ["main"], n_min=5)
    assert rep.passed
    found = set(rep.extremal_found[5])
    assert len(found) == 6
    assert canonical_g6(PARAGLIDER) in found
    assert all(canonical_g6(turan_graph(5, r)) in found for r in range(1, 6))


def test_gturan_at_four():
    rep = verify_theorems(4, ["gturan"], n_min=4)
    assert rep.passed
    assert set(rep.tight_found["gturan"][4]) == {canonical_g6(turan_graph(4, 2)), canonical_g6(turan_graph(4, 4))}
    # T(4,1) is edgeless: the edge sum is 0, not 8
    E4 = turan_graph(4, 1)
    assert edge_localized_check(E4, edge_clique_weights(E4)) == (Fraction(0), Fraction(8), False)


def test_expected_sets_deduplicate():
    exp = expected_tight_sets(3, ["main", "wlocal", "gturan", "fturan", "wturan"])
    assert len(exp["main"]) == 4
    assert len(exp["wlocal"]) == 2  # T(3,1), T(3,3)
    assert len(exp["gturan"]) == 1


def test_full_sweep_passes_all_theorems():
    rep = verify_theorems(7)
    assert rep.passed, rep.violations[:3]
    assert rep.graphs_checked == {1: 1, 2: 2, 3: 4, 4: 11, 5: 34, 6: 156, 7: 1044}


def test_parallel_matches_serial():
    serial = verify_theorems(6)
    parallel = verify_theorems(6, workers=2)
    assert serial.to_dict() == parallel.to_dict()


def test_external_stream_matches_builtin():
    lines = [write_graph6(G) for G in enumerate_graphs(6)]
    ext = verify_theorems(None, external_graphs=(parse_graph6(s) for s in lines))
    builtin = verify_theorems(6, n_min=6)
    assert ext.to_dict() == builtin.to_dict()


def test_incomplete_external_stream_fails():
    # drop K6: the main equality set at n = 6 is then incomplete
    graphs = [G for G in enumerate_graphs(6) if G.m != 15]
    rep = verify_theorems(None, ["main"], external_graphs=graphs)
    assert not rep.passed
    assert ("main", 6) in rep.set_mismatches()


def test_detects_broken_weights(monkeypatch):
    # understated clique weights make the bound false on the triangle
    monkeypatch.setattr(verify_mod, "vertex_clique_weights", lambda G: (2,) * G.n)
    rep = verify_theorems(3, ["main"], n_min=3)
    assert not rep.passed
    assert any(v.theorem == "main" and "exceeds" in v.details for v in rep.violations)


def test_check_graph_paraglider():
    res = check_graph(PARAGLIDER, verify_mod.THEOREMS)
    assert not res.violations
    assert res.tight == ["main"]


def test_report_json_shape():
    rep = verify_theorems(3, ["main"])
    d = rep.to_dict()
    rec = d["per_n"][-1]
    assert set(rec) >= {"n", "checked", "violations", "extremal", "passed"}
    assert rec == {**rec, "n": 3, "checked": 4, "passed": True}
    assert d["summary"]["passed"] is True


def test_limits():
    with pytest.raises(SizeLimitError):
        verify_theorems(9)
    with pytest.raises(ValueError):
        verify_theorems(3, ["nope"])
