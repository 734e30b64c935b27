import pytest

import cordial


def test_five_tournament_example():
    arcs = [(0, 1), (1, 2), (2, 3), (3, 4), (1, 4), (0, 2), (4, 2), (3, 0), (3, 1), (0, 4)]
    d = cordial.Digraph(5, arcs)
    assert cordial.lambda_triple(d, [0, 0, 1, 1, 0]) == (3, 3, 4)
    v = cordial.is_23_cordial(d)
    assert v.decision and bool(v)
    assert cordial.lambda_triple(d, v.labelling) == v.lambda_


def test_parallel_edges_scope():
    x7 = cordial.gen_parallel_edges_graph(7)
    assert not cordial.is_23_orientable(x7)
    assert cordial.is_23_orientable(x7, scope=cordial.Scope.ALL)
    assert not cordial.is_23_orientable(cordial.gen_parallel_edges_graph(6), cordial.Scope.ALL)


def test_wheels():
    assert not cordial.is_23_orientable(cordial.gen_wheel(10)).decision
    v = cordial.is_23_orientable(cordial.gen_wheel(6))
    assert v.orientation.size == 10
    assert cordial.orient_wheel(10) is None
    assert cordial.wheel_case(22) == "excluded"
    r = cordial.orient_wheel(12)
    assert r.validated


def test_fan_and_tournaments():
    assert cordial.orient_fan(10).lambda_ == (6, 6, 5)
    t = cordial.tournament_from_index(5, 77)
    assert cordial.label_5_tournament(t).lambda_ == (3, 3, 4)
    rows = cordial.census(4)
    assert len(rows) == 4
    assert sum(r["class_size"] for r in rows if r["cordial"]) == 48


def test_numbers():
    assert cordial.max_arcs(6) == 14
    assert cordial.max_arcs(7) == 18
    assert cordial.friendly_count(5) == 20
    assert cordial.cordial_feasible_triple(3, 1)
    assert not cordial.cordial_feasible_triple(3, 0)


def test_reverse_and_canonical():
    d = cordial.gen_cycle_out_wheel(5)
    r = cordial.reverse_digraph(d)
    assert cordial.reverse_digraph(r) == d
    assert r.in_degree(4) == 4


def test_errors():
    with pytest.raises(ValueError, match="line 3"):
        cordial.parse_graph_text("D 3 2\n0 1\n2\n")
    with pytest.raises(cordial.CapExceeded):
        cordial.canonical_form(cordial.Digraph(10, []))
    with pytest.raises(ValueError):
        cordial.gen_wheel(3)


def test_harness_filter():
    rows = cordial.run_harness(["quasigroup"])
    assert [r["id"] for r in rows] == ["c11-quasigroup"]
    assert rows[0]["pass"]
