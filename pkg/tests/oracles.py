"""Slow, obviously-correct reference implementations used only by tests."""

from __future__ import annotations

import itertools

import networkx as nx

from chromastab.graph import Graph


def to_nx(g: Graph) -> nx.Graph:
    h = nx.Graph()
    h.add_nodes_from(range(g.n))
    h.add_edges_from(g.edges)
    return h


def from_nx(h: nx.Graph) -> Graph:
    idx = {v: i for i, v in enumerate(sorted(h.nodes()))}
    return Graph(len(idx), ((idx[a], idx[b]) for a, b in h.edges()))


def set_partitions(n):
    """Restricted growth strings of length n."""
    if n == 0:
        yield []
        return
    rgs = [0] * n

    def rec(i, top):
        if i == n:
            yield list(rgs)
            return
        for c in range(top + 2):
            rgs[i] = c
            yield from rec(i + 1, max(top, c))

    rgs[0] = 0
    yield from rec(1, 0)


def brute_chi(g: Graph) -> int:
    if g.n == 0:
        return 0
    best = g.n
    for p in set_partitions(g.n):
        if all(p[u] != p[v] for u, v in g.edges):
            best = min(best, max(p) + 1)
    return best


def brute_colorable(g: Graph, k: int) -> bool:
    return any(
        all(c[u] != c[v] for u, v in g.edges) for c in itertools.product(range(k), repeat=g.n)
    )


def brute_cycles(g: Graph):
    """Every simple cycle as a frozenset of edges, via vertex subsets and their
    Hamiltonian cycles."""
    out = set()
    for r in range(3, g.n + 1):
        for sub in itertools.combinations(range(g.n), r):
            first, rest = sub[0], sub[1:]
            for perm in itertools.permutations(rest):
                if perm[0] > perm[-1]:
                    continue
                cyc = (first,) + perm
                edges = frozenset(
                    (min(cyc[i], cyc[(i + 1) % r]), max(cyc[i], cyc[(i + 1) % r])) for i in range(r)
                )
                if all(g.has_edge(a, b) for a, b in edges):
                    out.add(edges)
    return out


def brute_frustration(g: Graph) -> int:
    edges = g.sorted_edges()
    for r in range(len(edges) + 1):
        for f in itertools.combinations(edges, r):
            h = Graph(g.n, set(edges) - set(f))
            if nx.is_bipartite(to_nx(h)):
                return r
    raise AssertionError


def brute_es(g: Graph) -> int:
    """Smallest edge subset whose removal lowers chi by exactly one."""
    chi = brute_chi(g)
    edges = g.sorted_edges()
    for r in range(1, len(edges) + 1):
        for f in itertools.combinations(edges, r):
            if brute_chi(Graph(g.n, set(edges) - set(f))) == chi - 1:
                return r
    raise AssertionError


def brute_isomorphic(g: Graph, h: Graph) -> bool:
    if g.n != h.n or g.m != h.m or sorted(g.degrees()) != sorted(h.degrees()):
        return False
    for perm in itertools.permutations(range(g.n)):
        if all(h.has_edge(perm[a], perm[b]) for a, b in g.edges):
            return True
    return False


def atlas(max_n: int):
    """networkx graph atlas: every graph with at most seven vertices."""
    for h in nx.graph_atlas_g():
        if h.number_of_nodes() <= max_n:
            yield from_nx(h)


def brute_subdivision(g: Graph, pattern_n: int, pattern_edges) -> bool:
    """Any injective branch map plus any system of internally disjoint paths."""
    h = to_nx(g)
    paths_cache = {}

    def paths(s, t):
        if (s, t) not in paths_cache:
            paths_cache[(s, t)] = [tuple(p) for p in nx.all_simple_paths(h, s, t)]
        return paths_cache[(s, t)]

    for bm in itertools.permutations(range(g.n), pattern_n):
        branch = set(bm)

        def rec(i, used_inner, used_edges):
            if i == len(pattern_edges):
                return True
            a, b = pattern_edges[i]
            for p in paths(bm[a], bm[b]):
                inner = set(p[1:-1])
                if inner & branch or inner & used_inner:
                    continue
                es = {frozenset(e) for e in zip(p, p[1:])}
                if es & used_edges:
                    continue
                if rec(i + 1, used_inner | inner, used_edges | es):
                    return True
            return False

        if rec(0, set(), set()):
            return True
    return False
