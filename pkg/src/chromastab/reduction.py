"""Clique gluing gadget linking chromatic criticality to (k,2)-criticality."""

from __future__ import annotations

from dataclasses import dataclass

from .coloring import chromatic_number
from .errors import ParameterError, UndefinedInvariantError
from .graph import Graph, delete_edges, is_connected
from .stability import classify_critical


@dataclass(frozen=True)
class ReductionResult:
    gadget: Graph
    glued_vertex: int
    clique_vertices: tuple[int, ...]
    lhs: bool
    rhs: bool
    equivalent: bool

    def as_dict(self) -> dict:
        from .graph import write_graph6

        return {
            "gadget": write_graph6(self.gadget),
            "glued_vertex": self.glued_vertex,
            "clique_vertices": list(self.clique_vertices),
            "lhs": self.lhs,
            "rhs": self.rhs,
            "equivalent": self.equivalent,
        }


def _check(g: Graph, u: int, k: int):
    if k < 3:
        raise ParameterError(f"k must be >= 3, got {k}")
    if not 0 <= u < g.n:
        raise ParameterError(f"vertex {u} out of range for n={g.n}")
    if not is_connected(g):
        raise ParameterError("the host graph must be connected")


def clique_vertices(g: Graph, u: int, k: int) -> tuple[int, ...]:
    return (u,) + tuple(range(g.n, g.n + k - 1))


def bowtie(g: Graph, u: int, k: int) -> Graph:
    """Glue a k-clique onto ``g`` at ``u``; new vertices are ``g.n .. g.n+k-2``."""
    _check(g, u, k)
    clique = clique_vertices(g, u, k)
    new = [(a, b) for i, a in enumerate(clique) for b in clique[i + 1:]]
    return Graph(g.n + k - 1, list(g.edges) + new)


def is_chromatic_critical(g: Graph, k: int) -> bool:
    """chi(g) = k and every single edge deletion lowers chi to k-1."""
    if chromatic_number(g) != k:
        return False
    return all(chromatic_number(delete_edges(g, [e])) == k - 1 for e in g.sorted_edges())


def verify_reduction(g: Graph, u: int, k: int) -> ReductionResult:
    gadget = bowtie(g, u, k)
    lhs = is_chromatic_critical(g, k)
    try:
        rhs = classify_critical(gadget) == (k, 2)
    except UndefinedInvariantError:
        rhs = False
    return ReductionResult(gadget, u, clique_vertices(g, u, k), lhs, rhs, lhs == rhs)
