"""Subdivisions of small multigraph patterns inside a host graph."""

from __future__ import annotations

import enum
import itertools
from dataclasses import dataclass

from .graph import Graph, _edge


class PatternKind(str, enum.Enum):
    K2_4 = "K2_4"
    K4 = "K4"
    K3_221 = "K3_221"
    C4_2121 = "C4_2121"


PATTERNS: dict[PatternKind, tuple[int, tuple[tuple[int, int], ...]]] = {
    PatternKind.K2_4: (2, ((0, 1),) * 4),
    PatternKind.K4: (4, ((0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3))),
    PatternKind.K3_221: (3, ((0, 1), (0, 1), (0, 2), (0, 2), (1, 2))),
    PatternKind.C4_2121: (4, ((0, 1), (0, 1), (1, 2), (2, 3), (2, 3), (3, 0))),
}

SEARCH_ORDER = (PatternKind.K2_4, PatternKind.K4, PatternKind.K3_221, PatternKind.C4_2121)


def pattern_degrees(p: PatternKind) -> list[int]:
    n, edges = PATTERNS[p]
    deg = [0] * n
    for a, b in edges:
        deg[a] += 1
        deg[b] += 1
    return deg


@dataclass(frozen=True)
class SubdivisionEmbedding:
    """``branch_map[i]`` is the image of pattern vertex i; ``path_map[j]`` the
    host path (vertex sequence) of pattern edge j, in the pattern's edge order."""

    pattern: PatternKind
    branch_map: tuple[int, ...]
    path_map: tuple[tuple[int, ...], ...]

    def as_dict(self) -> dict:
        return {
            "pattern": self.pattern.value,
            "branch_map": list(self.branch_map),
            "paths": [list(p) for p in self.path_map],
        }


def validate_embedding(g: Graph, emb: SubdivisionEmbedding) -> list[str]:
    """Problems with ``emb`` as a subdivision witness in ``g`` (empty if valid)."""
    n, pedges = PATTERNS[emb.pattern]
    errs = []
    bm = emb.branch_map
    if len(bm) != n or len(set(bm)) != n:
        errs.append("branch map is not injective on the pattern vertices")
        return errs
    if len(emb.path_map) != len(pedges):
        errs.append("one path per pattern edge is required")
        return errs
    branch = set(bm)
    used_interior: set[int] = set()
    used_edges = set()
    for j, ((a, b), path) in enumerate(zip(pedges, emb.path_map)):
        if len(path) < 2:
            errs.append(f"path {j} has length 0")
            continue
        if {path[0], path[-1]} != {bm[a], bm[b]}:
            errs.append(f"path {j} does not join the images of its pattern edge")
        if len(set(path)) != len(path):
            errs.append(f"path {j} repeats a vertex")
        for x, y in zip(path, path[1:]):
            if not g.has_edge(x, y):
                errs.append(f"path {j} uses non-edge ({x}, {y})")
            e = _edge(x, y)
            if e in used_edges:
                errs.append(f"host edge {tuple(e)} used by two paths")
            used_edges.add(e)
        inner = set(path[1:-1])
        if inner & branch:
            errs.append(f"path {j} passes through a branch vertex")
        if inner & used_interior:
            errs.append(f"path {j} shares interior vertices with another path")
        used_interior |= inner
    return errs


def embedding_subgraph(g: Graph, emb: SubdivisionEmbedding) -> Graph:
    """The host subgraph formed by the embedding's paths (same vertex labels)."""
    edges = {_edge(x, y) for p in emb.path_map for x, y in zip(p, p[1:])}
    return Graph(g.n, edges)


def _paths(g: Graph, s: int, t: int, blocked: int):
    """Simple s-t paths avoiding ``blocked`` interior vertices, neighbor order ascending."""
    path = [s]
    onpath = 1 << s

    def rec(v):
        nonlocal onpath
        for w in g.adjacency[v]:
            if w == t:
                yield tuple(path) + (t,)
                continue
            bit = 1 << w
            if (blocked | onpath) & bit:
                continue
            path.append(w)
            onpath |= bit
            yield from rec(w)
            onpath ^= bit
            path.pop()

    yield from rec(s)


def _path_system(g, pedges, bm, i, blocked, used_direct, acc):
    if i == len(pedges):
        return list(acc)
    a, b = pedges[i]
    s, t = bm[a], bm[b]
    # parallel pattern edges are interchangeable: keep their paths increasing
    floor = acc[-1] if i and pedges[i - 1] == pedges[i] else None
    for p in _paths(g, s, t, blocked):
        if floor is not None and p <= floor:
            continue
        if len(p) == 2:
            e = _edge(s, t)
            if e in used_direct:
                continue
            used_direct.add(e)
            acc.append(p)
            res = _path_system(g, pedges, bm, i + 1, blocked, used_direct, acc)
            acc.pop()
            used_direct.discard(e)
        else:
            inner = 0
            for v in p[1:-1]:
                inner |= 1 << v
            acc.append(p)
            res = _path_system(g, pedges, bm, i + 1, blocked | inner, used_direct, acc)
            acc.pop()
        if res is not None:
            return res
    return None


def find_subdivision(g: Graph, p: PatternKind) -> SubdivisionEmbedding | None:
    """First embedding in lexicographic branch-map order, or None."""
    p = PatternKind(p)
    n, pedges = PATTERNS[p]
    need = pattern_degrees(p)
    deg = g.degrees()
    cands = [[v for v in range(g.n) if deg[v] >= need[i]] for i in range(n)]
    for bm in itertools.product(*cands):
        if len(set(bm)) != n:
            continue
        blocked = 0
        for v in bm:
            blocked |= 1 << v
        paths = _path_system(g, pedges, bm, 0, blocked, set(), [])
        if paths is not None:
            return SubdivisionEmbedding(p, tuple(bm), tuple(paths))
    return None


def find_any_proposition9_pattern(g: Graph) -> tuple[PatternKind, SubdivisionEmbedding] | None:
    """Try K2_4, K4, K3_221, C4_2121 in that order; first hit wins."""
    for p in SEARCH_ORDER:
        emb = find_subdivision(g, p)
        if emb is not None:
            return p, emb
    return None
