from __future__ import annotations

import csv
import io
import json
import random

import pytest

from chromastab.errors import UnsupportedOrderError
from chromastab.graph import Graph, canonical_form, parse_graph6, write_graph6
from chromastab.harness import (
    CHECKS,
    enumerate_small_graphs,
    extend_census,
    graph_census,
    intersection_shape,
    isolate_free_census,
    scan_stream,
    verify_theorem1,
)
from chromastab.stability import analyze

from oracles import atlas

ALL = [1, 2, 4, 11, 34, 156, 1044, 12346]
CONNECTED = [1, 1, 2, 6, 21, 112, 853, 11117]


@pytest.mark.parametrize("n", range(1, 9))
def test_census_counts(n):
    assert len(graph_census(n)) == ALL[n - 1]
    assert len(graph_census(n, connected_only=True)) == CONNECTED[n - 1]


def test_enumerate_small_graphs_examples():
    assert len(list(enumerate_small_graphs(3))) == 4
    assert len(list(enumerate_small_graphs(4, connected_only=True))) == 6
    with pytest.raises(UnsupportedOrderError):
        list(enumerate_small_graphs(9))


def test_census_matches_atlas():
    for n in range(1, 8):
        ours = set(graph_census(n))
        ref = {canonical_form(g) for g in atlas(7) if g.n == n}
        assert ours == ref


def test_extend_census():
    g5 = list(enumerate_small_graphs(5))
    g6 = extend_census(g5)
    assert [write_graph6(g) for g in g6] == graph_census(6)


def test_intersection_shape():
    # two triangles sharing an edge
    assert intersection_shape((0, 1, 2), (0, 1, 3)) == (2, 1, True)
    assert intersection_shape((0, 1, 2), (0, 3, 4)) == (1, 0, True)
    assert intersection_shape((0, 1, 2), (3, 4, 5)) == (0, 0, False)
    # two 5-cycles meeting in two non-adjacent vertices
    assert intersection_shape((0, 1, 2, 3, 4), (0, 5, 2, 6, 7))[2] is False


def test_scan_small_connected():
    lines = [s for n in range(1, 6) for s in graph_census(n, connected_only=True)]
    rep = scan_stream(lines)
    crit = rep.criticals()
    assert [c["graph6"] for c in crit] == [canonical_form(Graph(5, [(0, 1), (1, 2), (0, 2), (0, 3), (3, 4), (0, 4)]))]
    assert crit[0]["families"] == ["B"]


def test_scan_order_six():
    rep = scan_stream(graph_census(6))
    tags = {c["graph6"]: c["families"] for c in rep.criticals()}
    two_k3 = canonical_form(parse_graph6("EwCW"))
    theta = canonical_form(Graph(6, [(0, 1), (0, 2), (2, 3), (3, 1), (0, 4), (4, 1), (0, 5), (5, 1)]))
    assert tags[two_k3] == ["A"]
    assert tags[theta] == ["C", "E"]
    d = rep.to_dict()
    assert d["theorem5_holds"] and d["lemma_violations"] == []
    assert d["normalized_isolates"] > 0


def test_report_counts_consistent():
    rep = scan_stream(isolate_free_census(7))
    for row in rep.per_order().values():
        assert sum(row["by_odd_cycles"].values()) == row["critical_32"]
    assert sum(r["graphs"] for r in rep.per_order().values()) == len(rep.rows)


def test_report_records_revalidate():
    rep = scan_stream(isolate_free_census(7))
    for c in rep.criticals():
        rec = analyze(parse_graph6(c["graph6"]))
        assert rec.k_l == (3, 2)
        assert [list(e) for e in rec.witness_set] == c["witness_set"]
        assert list(rec.families) == c["families"]


def test_report_is_order_independent():
    lines = list(isolate_free_census(6))
    shuffled = list(lines)
    random.Random(3).shuffle(shuffled)
    relabeled = [write_graph6(parse_graph6(s).relabel(list(reversed(range(parse_graph6(s).n))))) for s in shuffled]
    a = scan_stream(lines).to_json()
    assert scan_stream(shuffled).to_json() == a
    assert scan_stream(relabeled).to_json() == a


def test_empty_stream_and_parse_errors():
    rep = scan_stream([])
    assert rep.to_dict()["graphs_total"] == 0
    assert rep.to_dict()["theorem1_holds"] is True
    rep = scan_stream(["A_", "!!", "", "# comment", "Bw"])
    d = rep.to_dict()
    assert d["graphs_total"] == 2
    assert d["parse_errors"][0]["line"] == 2


def test_check_selection():
    rep = scan_stream(["DK{"], checks=["theorem5"])
    d = rep.to_dict()
    assert d["theorem5_holds"] is True and d["theorem1_holds"] is None
    with pytest.raises(ValueError):
        scan_stream(["DK{"], checks=["nope"])
    assert set(CHECKS) >= {"lemma2", "prop9", "problem1"}


def test_csv_rows():
    rep = scan_stream(["DK{", "A_"])
    rows = list(csv.DictReader(io.StringIO(rep.to_csv())))
    assert [r["graph6"] for r in rows] == ["A_", "DK{"]
    assert rows[1]["families"] == "B" and rows[1]["k"] == "3" and rows[1]["l"] == "2"
    assert rows[0]["es"] == "1" and rows[0]["critical"] == "0"


def test_json_key_order_stable():
    d = json.loads(scan_stream(["DK{"]).to_json())
    assert list(d)[:3] == ["orders", "graphs_total", "normalized_isolates"]


def test_verify_theorem1_examples():
    v = verify_theorem1(6)
    assert v.holds and len(v.criticals) == 4
    assert set(v.criticals) == set(v.family_members)
    v = verify_theorem1(5)
    assert v.holds and len(v.criticals) == 1
    v = verify_theorem1(3)
    assert v.holds and v.criticals == () and v.family_members == ()


def test_jobs_give_identical_reports():
    lines = list(isolate_free_census(6))
    assert scan_stream(lines, jobs=2).to_json() == scan_stream(lines, jobs=1).to_json()
