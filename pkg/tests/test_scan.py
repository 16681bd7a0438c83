import json

import pytest

from specham.codec import parse_graph6
from specham.graph import connectivity, is_connected
from specham.scan import (MAX_EXHAUSTIVE_N, ScanReport, exhaustive_scan, graph_from_code,
                          pair_order, random_clawfree, random_scan, reports_to_csv,
                          reports_to_json)
from specham.structure import is_claw_free, is_closed
from specham.theorems import check


def direct_counts(n, theorem, filter="all"):
    """Unscreened reference: check() on every labelled graph."""
    hyp = cex = 0
    for code in range(1 << (n * (n - 1) // 2)):
        g = graph_from_code(n, code)
        if filter != "all":
            if not is_claw_free(g):
                continue
            c = connectivity(g)
            if not (c.is_two_connected if filter == "clawfree_2connected" else c.is_connected):
                continue
        v = check(g, theorem)
        hyp += v.hypothesis_holds
        cex += v.status == "counterexample"
    return hyp, cex


def test_pair_order_matches_graph6_columns():
    assert pair_order(4) == [(0, 1), (0, 2), (1, 2), (0, 3), (1, 3), (2, 3)]
    g = graph_from_code(4, 0b000001)
    assert g.edges() == [(0, 1)]


@pytest.mark.parametrize("n", [3, 4, 5])
@pytest.mark.parametrize("theorem", ["FiNi_trace", "FiNi_ham", "FiNiC_trace", "FiNiC_ham",
                                     "L_dudv"])
def test_screen_keeps_every_hypothesis_graph(n, theorem):
    report = exhaustive_scan(n, theorem)
    assert report.total == 1 << (n * (n - 1) // 2)
    assert (report.hypothesis_true, report.counterexample_count) == direct_counts(n, theorem)


def test_structural_filters_count():
    report = exhaustive_scan(5, "NiLi_mu", filter="clawfree_connected")
    expected = sum(1 for code in range(1 << 10)
                   if is_claw_free(g := graph_from_code(5, code)) and is_connected(g))
    assert report.filtered == report.checked == expected


def test_exhaustive_argument_checks():
    with pytest.raises(ValueError):
        exhaustive_scan(MAX_EXHAUSTIVE_N + 1, "FiNi_trace")
    with pytest.raises(ValueError):
        exhaustive_scan(4, "FiNi_trace", filter="bogus")


def test_small_scans_are_clean():
    for n in range(1, 7):
        for theorem in ("FiNi_trace", "FiNiC_trace"):
            r = exhaustive_scan(n, theorem)
            assert r.counterexample_count == 0 and r.unresolved == 0


@pytest.mark.parametrize("mode", ["line_graph", "closure_perturbed"])
def test_random_clawfree_instances(mode):
    for seed in range(40):
        n = 4 + seed % 9
        g = random_clawfree(n, seed, mode)
        assert g.n == n and is_claw_free(g) and is_connected(g)
        assert random_clawfree(n, seed, mode) == g


def test_closed_flag():
    g = random_clawfree(10, 5, "closure_perturbed", close=True)
    assert is_closed(g)


def test_random_clawfree_rejects():
    with pytest.raises(ValueError):
        random_clawfree(3, 0)
    with pytest.raises(ValueError):
        random_clawfree(8, 0, mode="other")


def test_random_scan_report():
    r = random_scan("L_eG(4)", range(8, 13), 30, seed=7, mode="closure_perturbed")
    assert r.theorem == "L_eG(4)" and r.n == "8..12"
    assert r.total == r.checked == 30
    assert r.counterexample_count == 0
    again = random_scan("L_eG(4)", range(8, 13), 30, seed=7, mode="closure_perturbed")
    assert again.to_dict() == r.to_dict()


def test_report_merge_and_serialisation():
    a = exhaustive_scan(4, "FiNi_trace")
    b = exhaustive_scan(5, "FiNi_trace")
    m = a.merge(b)
    assert m.n == "mixed" and m.total == a.total + b.total
    data = json.loads(reports_to_json([a, b]))
    assert data[0]["counterexample_count"] == 0
    lines = reports_to_csv([a, b]).splitlines()
    assert lines[0].split(",") == list(ScanReport.CSV_FIELDS)
    assert len(lines) == 3


def test_counterexamples_recorded_as_graph6():
    from specham.extremal import build_en
    r = ScanReport("L_eG_EPn", 14, "manual")
    g = build_en(14)
    r.add(g, check(g, "L_eG_EPn"))
    assert parse_graph6(r.counterexamples[0]) == g


# ids outside the exhaustive scans: 1000 random claw-free graphs each; the ones with
# large order thresholds are checked on the hypothesis side only
RANDOM_JOBS = [
    ("NiLi_mu", range(6, 15), "line_graph"),
    ("L_eG(3)", range(8, 15), "closure_perturbed"),
    ("L_eG(4)", range(8, 15), "closure_perturbed"),
    ("L_eG(5)", range(10, 15), "closure_perturbed"),
    ("L_eG(6)", range(12, 15), "closure_perturbed"),
    ("L_ENn", range(6, 15), "closure_perturbed"),
    ("L_eG_ENn", range(6, 15), "line_graph"),
    ("L_EPn", range(9, 15), "closure_perturbed"),
    ("L_eG_EPn", range(12, 17), "line_graph"),
    ("L_eG_EPn_ham", range(12, 17), "line_graph"),
    ("NiLi_comu", range(24, 30), "line_graph"),
    ("Traceable_q", range(18, 24), "line_graph"),
    ("Ham_mu", range(33, 38), "line_graph"),
    ("Ham_q", range(51, 55), "line_graph"),
    ("Ham_comu", [219], "line_graph"),
]


@pytest.mark.parametrize("theorem, sizes, mode", RANDOM_JOBS, ids=[j[0] for j in RANDOM_JOBS])
def test_random_instances_have_no_counterexamples(theorem, sizes, mode):
    r = random_scan(theorem, sizes, 1000, seed=1, mode=mode)
    assert r.checked == 1000
    assert r.counterexample_count == 0 and r.unresolved == 0
