import pytest

import cliquepoly as cp


def triangle():
    return cp.Graph.from_graph6("Bw")


def test_triangle_polynomial():
    g = triangle()
    assert g.order == 3 and g.edge_count == 3
    assert str(cp.clique_polynomial(g)) == "1+3x+3x^2+x^3"
    assert cp.clique_polynomial(g) == cp.count_cliques_bruteforce(g)
    assert cp.clique_polynomial(g).coefficients == [1, 3, 3, 1]


def test_counterexample_and_corrected_case():
    g = triangle()
    bad = cp.identity_check(g, "0-1,0-2")
    assert not bad["holds"]
    assert not bad["m_edge_complete"]
    assert str(bad["theorem_rhs"]) == "1+3x+3x^2+2x^3"
    assert str(bad["diff"]) == "x^3"

    good = cp.identity_check(g, [(0, 1), (0, 2), (1, 2)])
    assert good["holds"] and good["m_edge_complete"]
    assert str(cp.cstar(g, "0-1")) == "1+x"
    assert str(cp.inclusion_exclusion_rhs(g, "0-1,0-2")) == "1+3x+x^2"


def test_explain_localizes_discrepancy():
    ledger = cp.explain_diff(triangle(), "0-1,0-2")
    nonzero = [r for r in ledger["residuals"] if not r["residual"].is_zero()]
    assert [r["support"] for r in nonzero] == [[0, 1, 2]]
    assert str(nonzero[0]["residual"]) == "x^3"


def test_spanning_counts():
    assert [cp.spanning_subgraph_count(4, q) for q in range(2, 7)] == [3, 16, 15, 6, 1]
    assert [cp.alternating_spanning_sum(p) for p in range(2, 6)] == [-1, 2, -3, 4]


def test_sweep_report_shape_and_determinism():
    report = cp.sweep(3, mode="exhaustive")
    assert report["config"]["mode"] == "exhaustive"
    cells = {(c["holds"], c["m_edge_complete"]): c for c in report["cells"]}
    assert cells[(False, True)]["count"] == 0
    assert {"graph": "Bw", "m": "0-1,0-2"}.items() <= cells[(False, False)]["witnesses"][0].items()
    assert cp.sweep_json(3, 3) == cp.sweep_json(3, 3, threads=4)


def test_errors_map_to_python_exceptions():
    with pytest.raises(cp.ParseError):
        cp.Graph.from_graph6("B")
    with pytest.raises(cp.DomainError):
        cp.theorem_rhs(triangle(), [])
    with pytest.raises(cp.ScaleError):
        cp.sweep(6, mode="exhaustive")
