import pytest

import mhclab


def test_graph_basics():
    g = mhclab.Graph.from_edges(4, [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)])
    assert g.n == 4
    assert g.m == 6
    assert g == mhclab.Graph.complete(4)
    degrees, lo, hi = mhclab.degree_profile(g)
    assert degrees == [3, 3, 3, 3]
    assert (lo, hi) == (3, 3)

    smaller = g.remove_edge(0, 1)
    assert smaller.m == 5
    assert g.m == 6  # value semantics


def test_graph6_round_trip():
    c6 = mhclab.Graph.cycle(6)
    assert mhclab.parse_graph6(mhclab.emit_graph6(c6)) == c6
    assert mhclab.emit_graph6(mhclab.Graph.complete(4)) == "C~"


def test_validity_and_construct():
    assert mhclab.validity(16, 5) == (True, "OK")
    assert mhclab.validity(7, 5) == (False, "DeltaEqualsNMinus2")

    lg = mhclab.construct(16, 5)
    assert lg.family == "odd"
    assert lg.n == 16
    degrees, lo, hi = mhclab.degree_profile(lg.graph)
    assert hi == 5 and lo == 3
    assert lg.graph.m == 25
    assert lg.vertex("y1") >= 0

    even = mhclab.construct(17, 5)
    assert even.family == "even"
    assert even.graph.m == 27

    with pytest.raises(ValueError):
        mhclab.construct(7, 5)


def test_solver():
    c5 = mhclab.Graph.cycle(5)
    assert mhclab.hamilton_path_exists(c5, 0, 1)
    assert not mhclab.hamilton_path_exists(c5, 0, 2)
    assert mhclab.find_hamilton_path(c5, 0, 2) is None
    assert mhclab.find_hamilton_path(mhclab.Graph.cycle(4), 0, 1) == [0, 3, 2, 1]

    res = mhclab.is_hamiltonian_connected(mhclab.Graph.cycle(6))
    assert res["is_hc"] is False
    assert res["pruned_by"] == "MinDegree"


def test_minimality():
    w6 = mhclab.build_wheel(6)
    verdict = mhclab.is_minimally_hc(w6.graph)
    assert verdict["is_minimal"] is True
    assert len(verdict["edges"]) == 10

    assert mhclab.is_minimally_hc(mhclab.Graph.complete(5))["is_minimal"] is False
    assert mhclab.fast_minimality_argument(mhclab.construct(17, 5)) is True


def test_formulas():
    lg = mhclab.construct(16, 5)
    case, u, v = mhclab.dispatch(lg, lg.vertex("y2"), lg.vertex("z5"))
    assert case == "1.6"
    path = mhclab.emit_path(lg, lg.vertex("y2"), lg.vertex("z5"))
    assert sorted(path) == list(range(16))

    report = mhclab.verify_all_pairs(lg)
    assert report == {"pairs": 120, "verified": 120, "all_verified": True}


def test_survey():
    report = mhclab.survey(5)
    assert report["graphs_scanned"] == 34
    assert report["max_degree_spectrum"] == {4}
    assert report["min_degree_spectrum"] == {3}
    assert report["wheel_unique_at_top"] is True
    assert len(report["mhc_graphs"]) == 1
    assert mhclab.is_wheel(mhclab.parse_graph6(report["mhc_graphs"][0]))

    lines = [mhclab.emit_graph6(g) for g in mhclab.enumerate_classes(5)]
    streamed = mhclab.survey_graph6_lines(lines, workers=2)
    assert streamed["mhc_graphs"] == report["mhc_graphs"]

    assert mhclab.hunt_min_degree_4(5) is None


def test_dot_and_roles():
    lg = mhclab.construct(17, 5)
    roles = lg.roles()
    assert roles[0] == "x"
    dot = mhclab.emit_dot(lg)
    assert "z0" in dot and "w6" in dot
