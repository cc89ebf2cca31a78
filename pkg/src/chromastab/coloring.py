"""Exact k-colorability and chromatic number."""

from __future__ import annotations

from dataclasses import dataclass

from . import kernels
from .graph import Graph


@dataclass(frozen=True)
class Coloring:
    colors: tuple[int, ...]
    k: int

    def is_proper(self, g: Graph) -> bool:
        if len(self.colors) != g.n or any(not 0 <= c < self.k for c in self.colors):
            return False
        return all(self.colors[u] != self.colors[v] for u, v in g.edges)


def is_k_colorable(g: Graph, k: int) -> Coloring | None:
    """A proper coloring with ``k`` colors, or None if none exists."""
    if k < 1:
        raise ValueError("k must be >= 1")
    if g.n == 0:
        return Coloring((), k)
    cols = kernels.k_coloring(g.masks, k)
    if cols is None:
        return None
    return Coloring(tuple(cols), k)


def chromatic_number(g: Graph) -> int:
    return kernels.chromatic_number(g.masks)[0]


def optimal_coloring(g: Graph) -> Coloring:
    chi, cols = kernels.chromatic_number(g.masks)
    return Coloring(tuple(cols), chi)
