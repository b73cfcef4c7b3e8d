import pathlib

import pytest

critcol = pytest.importorskip("critcol")

DATA = pathlib.Path(__file__).resolve().parents[2] / "tests" / "data"


def test_graph_basics():
    g = critcol.Graph(4, [(0, 1), (1, 2), (2, 3)])
    assert g == critcol.path_graph(4)
    assert g.order == 4 and g.edge_count == 3
    assert g.edges() == [(0, 1), (1, 2), (2, 3)]
    assert critcol.complement(critcol.complement(g)) == g
    assert critcol.contract_edge(critcol.cycle_graph(4), (0, 1)).edge_count == 3


def test_coloring():
    f = critcol.grotzsch()
    r = critcol.chi(f)
    assert (r.chi, r.method) == (4, "Exact")
    assert critcol.chi(critcol.cycle_graph(5)).method == "P1P3Structural"
    assert critcol.chi(critcol.complete_graph(4)).method == "Cotree"
    assert critcol.chi_bruteforce(critcol.cycle_graph(7)) == 3
    assert len(critcol.clique_cover(critcol.cycle_graph(5))) == 3


def test_criticality():
    c5 = critcol.cycle_graph(5)
    assert critcol.critical_vertices(c5) == [0, 1, 2, 3, 4]
    assert critcol.critical_edges(c5) == critcol.contraction_critical_edges(c5)
    assert not critcol.has_critical_vertex(critcol.path_graph(4))
    assert critcol.has_critical_vertex(critcol.grotzsch_instance(c5))


def test_classifier_and_patterns():
    assert critcol.classify_h(critcol.named_pattern("P4")) == ("PolyTime", "SubP4")
    assert critcol.classify_h(critcol.named_pattern("2P2")) == ("CoNPHard", "LinearForestHard")
    assert critcol.contains_induced(critcol.cycle_graph(7), critcol.named_pattern("P1+P3"))
    assert critcol.find_induced(critcol.cycle_graph(5), critcol.named_pattern("P1+P3")) is None


def test_formulas_and_gadgets():
    phi = critcol.Formula([(1, 2, 3)] * 3)
    assert critcol.oracle_1in3(phi).count(True) == 1
    g = critcol.vertex_gadget(phi)
    assert (g.order, g.edge_count) == (21, 30)
    assert len(critcol.clique_cover(g)) == 10
    assert not critcol.has_critical_vertex(critcol.vertex_gadget(phi, complement=True))
    assert critcol.edge_gadget(phi).order == 33

    fixture = critcol.read_formula(DATA / "unsat_n6.m1in3")
    assert fixture == critcol.random_formula(6, 8)
    assert critcol.oracle_1in3(fixture) is None


def test_dimacs_round_trip(tmp_path):
    g = critcol.read_dimacs(DATA / "grotzsch.col")
    assert g == critcol.grotzsch()
    assert critcol.parse_dimacs(critcol.to_dimacs(g)) == g


def test_errors():
    with pytest.raises(critcol.ArgumentError):
        critcol.cycle_graph(2)
    with pytest.raises(critcol.ResourceError):
        critcol.chi_exact(critcol.grotzsch(), cap=5)
    with pytest.raises(critcol.ParseError):
        critcol.parse_dimacs("p edge 2 1\n")
    with pytest.raises(critcol.FormulaError):
        critcol.Formula([(1, 1, 2), (1, 2, 3), (2, 3, 3)])
    assert issubclass(critcol.ResourceError, critcol.CritcolError)


def test_verify(tmp_path):
    r = critcol.verify("thm3", seed=7, samples=5, out_dir=tmp_path)
    assert r["schema"] == 1
    assert r["ok"] and r["run"] == 5
    with pytest.raises(critcol.ArgumentError):
        critcol.verify("nope")
