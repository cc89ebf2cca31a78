from __future__ import annotations

import networkx as nx
import pytest
from hypothesis import given

from chromastab.coloring import chromatic_number, is_k_colorable, optimal_coloring
from chromastab.graph import Graph, complete_graph, cycle_graph, delete_edges, is_bipartite, parse_graph6
from chromastab.harness import graph_census

from conftest import graphs
from oracles import atlas, brute_chi, brute_colorable, from_nx


def test_k_colorable_examples():
    assert is_k_colorable(cycle_graph(5), 2) is None
    col = is_k_colorable(cycle_graph(5), 3)
    assert col is not None and col.is_proper(cycle_graph(5))
    assert is_k_colorable(complete_graph(4), 3) is None
    with pytest.raises(ValueError):
        is_k_colorable(cycle_graph(3), 0)


def test_chromatic_number_examples():
    assert chromatic_number(complete_graph(4)) == 4
    assert chromatic_number(cycle_graph(5)) == 3
    assert chromatic_number(Graph(0)) == 0
    assert chromatic_number(Graph(3)) == 1


def test_petersen_is_three_chromatic():
    g = from_nx(nx.petersen_graph())
    assert chromatic_number(g) == 3
    assert not brute_colorable(g, 2)
    assert brute_colorable(g, 3)


def test_chromatic_number_matches_partition_oracle():
    for g in atlas(7):
        assert chromatic_number(g) == brute_chi(g), g


@given(graphs(max_n=7))
def test_k_colorable_matches_brute(g):
    for k in range(1, 4):
        col = is_k_colorable(g, k)
        assert (col is not None) == brute_colorable(g, k)
        if col is not None:
            assert col.is_proper(g)


@given(graphs(max_n=10))
def test_optimal_coloring_is_proper(g):
    col = optimal_coloring(g)
    assert col.is_proper(g)
    assert col.k == chromatic_number(g)
    if g.n:
        assert is_k_colorable(g, col.k) is not None
        if col.k > 1:
            assert is_k_colorable(g, col.k - 1) is None


@given(graphs(max_n=9))
def test_bipartite_iff_chi_at_most_two(g):
    assert is_bipartite(g).bipartite == (chromatic_number(g) <= 2)


def test_single_edge_deletion_bounds_exhaustive():
    for n in range(1, 9):
        for s in graph_census(n):
            g = parse_graph6(s)
            chi = chromatic_number(g)
            for e in g.edges:
                c = chromatic_number(delete_edges(g, [e]))
                assert chi - 1 <= c <= chi


def test_deterministic_coloring():
    g = cycle_graph(7)
    assert is_k_colorable(g, 3) == is_k_colorable(g, 3)
