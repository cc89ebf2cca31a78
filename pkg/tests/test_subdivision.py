from __future__ import annotations

from hypothesis import given

from chromastab.families import FamilyParams, generate
from chromastab.graph import Graph, complete_graph, count_odd_cycles, cycle_graph
from chromastab.subdivision import (
    PATTERNS,
    PatternKind,
    SubdivisionEmbedding,
    embedding_subgraph,
    find_any_proposition9_pattern,
    find_subdivision,
    validate_embedding,
)

from conftest import graphs
from oracles import atlas, brute_subdivision

BUTTERFLY = Graph(5, [(0, 1), (1, 2), (0, 2), (0, 3), (3, 4), (0, 4)])


def test_examples():
    emb = find_subdivision(complete_graph(4), PatternKind.K4)
    assert emb.branch_map == (0, 1, 2, 3)
    assert all(len(p) == 2 for p in emb.path_map)
    theta = generate(FamilyParams("C", (1, 3, 2, 2)))
    emb = find_subdivision(theta, PatternKind.K2_4)
    assert set(emb.branch_map) == {0, 1}
    assert find_subdivision(cycle_graph(6), PatternKind.K2_4) is None


def test_proposition9_examples():
    assert find_any_proposition9_pattern(BUTTERFLY) is None
    d = generate(FamilyParams("D", (1, 2, 2, 2, 2, 1), "iii"))
    kind, emb = find_any_proposition9_pattern(d)
    assert kind is PatternKind.K4
    assert not validate_embedding(d, emb)
    assert find_any_proposition9_pattern(cycle_graph(5)) is None


def test_validator_catches_bad_embeddings():
    k4 = complete_graph(4)
    good = find_subdivision(k4, PatternKind.K4)
    assert validate_embedding(k4, good) == []
    bad = SubdivisionEmbedding(PatternKind.K4, (0, 0, 2, 3), good.path_map)
    assert validate_embedding(k4, bad)
    twice = SubdivisionEmbedding(PatternKind.K2_4, (0, 1), ((0, 1), (0, 1), (0, 2, 1), (0, 3, 1)))
    assert any("used by two paths" in e for e in validate_embedding(k4, twice))
    through = SubdivisionEmbedding(PatternKind.K2_4, (0, 1), ((0, 1), (0, 2, 1), (0, 2, 3, 1), (0, 3, 1)))
    assert validate_embedding(k4, through)


def test_parallel_pattern_edges_need_distinct_paths():
    # a triangle has only one direct 0-1 edge and one detour, never four paths
    assert find_subdivision(cycle_graph(3), PatternKind.K2_4) is None
    # K4 has exactly three internally disjoint 0-1 paths
    assert find_subdivision(complete_graph(4), PatternKind.K2_4) is None
    assert find_subdivision(complete_graph(5), PatternKind.K2_4) is not None


def test_deterministic_first_branch_map():
    k5 = complete_graph(5)
    emb = find_subdivision(k5, PatternKind.K3_221)
    assert emb.branch_map == (0, 1, 2)
    assert find_subdivision(k5, PatternKind.K3_221) == emb


def _check_against_oracle(g):
    for kind in PatternKind:
        n, edges = PATTERNS[kind]
        emb = find_subdivision(g, kind)
        assert (emb is not None) == brute_subdivision(g, n, edges), (g, kind)
        if emb is not None:
            assert validate_embedding(g, emb) == []


def test_completeness_exhaustive_up_to_6():
    for g in atlas(6):
        _check_against_oracle(g)


@given(graphs(min_n=5, max_n=8))
def test_completeness_random_up_to_8(g):
    _check_against_oracle(g)


@given(graphs(max_n=9))
def test_soundness(g):
    hit = find_any_proposition9_pattern(g)
    if hit is not None:
        kind, emb = hit
        assert emb.pattern is kind
        assert validate_embedding(g, emb) == []
        sub = embedding_subgraph(g, emb)
        assert sub.edges <= g.edges


def test_patterns_have_two_odd_cycles_in_critical_members():
    for p in (("C", (1, 3, 2, 2)), ("D", (1, 1, 1, 1, 1, 3)), ("D", (1, 2, 2, 2, 2, 1))):
        g = generate(FamilyParams(*p))
        _, emb = find_any_proposition9_pattern(g)
        assert count_odd_cycles(embedding_subgraph(g, emb)).odd_count >= 2
