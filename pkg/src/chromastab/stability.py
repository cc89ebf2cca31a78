"""Chromatic edge-stability number, criticality, and the fast (3,2) recognizer."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterator

from . import kernels
from .errors import UndefinedInvariantError
from .graph import Edge, Graph, OddCycleCensus, count_odd_cycles, delete_edges

METHODS = ("auto", "subset", "partition")
CENSUS_CUTOFF = 5


@dataclass(frozen=True)
class CriticalityRecord:
    chi: int
    es: int | None
    witness_set: tuple[Edge, ...]
    is_critical: bool
    k_l: tuple[int, int] | None
    odd_cycles: OddCycleCensus
    families: tuple[str, ...] = field(default=())

    def as_dict(self) -> dict:
        return {
            "chi": self.chi,
            "es": self.es,
            "witness_set": [list(e) for e in self.witness_set],
            "critical": self.is_critical,
            "kl": list(self.k_l) if self.k_l else None,
            "odd_cycles": {
                "odd_count": self.odd_cycles.odd_count,
                "total_count": self.odd_cycles.total_count,
                "saturated": self.odd_cycles.saturated,
                "witnesses": [list(c) for c in self.odd_cycles.witnesses],
            },
            "families": list(self.families),
        }


def _mono_edges(masks, colors) -> list[Edge]:
    n = len(masks)
    return [
        Edge(u, v)
        for u in range(n)
        for v in range(u + 1, n)
        if masks[u] >> v & 1 and colors[u] == colors[v]
    ]


def _colex(r: int, m: int) -> Iterator[tuple[int, ...]]:
    if r == 0:
        yield ()
        return
    for top in range(r - 1, m):
        for rest in _colex(r - 1, top):
            yield rest + (top,)


def _es_subset(g: Graph, chi: int) -> tuple[int, list[Edge]]:
    deg = g.degrees()
    edges = sorted(g.edges, key=lambda e: (deg[e.u] + deg[e.v], e))
    for r in range(1, g.m + 1):
        for idx in _colex(r, len(edges)):
            f = [edges[i] for i in idx]
            h = delete_edges(g, f)
            if kernels.chromatic_number(h.masks)[0] == chi - 1:
                return r, sorted(f)
    raise AssertionError("unreachable: deleting every edge leaves chi <= 1")


def _chi(g: Graph) -> int:
    return kernels.chromatic_number(g.masks)[0]


def edge_stability(g: Graph, method: str = "auto", chi: int | None = None) -> tuple[int, list[Edge]]:
    """Minimum number of edges whose removal lowers chi by one, with a witness.

    ``method="auto"`` uses the closed form for chi=2, odd-cycle branching for
    chi=3, and a minimum-monochromatic (chi-1)-partition otherwise.
    ``"subset"`` tries edge subsets by increasing size; ``"partition"`` always
    uses the partition search. All three return the same count.
    """
    if method not in METHODS:
        raise ValueError(f"unknown method {method!r}; choose from {METHODS}")
    if chi is None:
        chi = _chi(g)
    if chi <= 1:
        raise UndefinedInvariantError(f"es_chi is undefined for chi={chi}")
    if method == "subset":
        return _es_subset(g, chi)
    if method == "auto":
        return es_from_masks(g.masks, chi)
    cost, colors = kernels.min_mono_partition(g.masks, chi - 1)
    return cost, _mono_edges(g.masks, colors)


def es_from_masks(masks, chi: int) -> tuple[int, list[Edge]]:
    """The ``auto`` dispatch of :func:`edge_stability` on raw adjacency masks."""
    if chi == 2:
        edges = [Edge(u, v) for u, v in _edge_pairs(masks)]
        return len(edges), edges
    if chi == 3:
        count, edges = kernels.frustration(masks)
        return count, [Edge(u, v) for u, v in edges]
    cost, colors = kernels.min_mono_partition(masks, chi - 1)
    return cost, _mono_edges(masks, colors)


def bipartite_edge_frustration(g: Graph) -> tuple[int, list[Edge]]:
    """Minimum edge set whose deletion leaves ``g`` bipartite."""
    count, edges = kernels.frustration(g.masks)
    return count, [Edge(u, v) for u, v in edges]


def _without(masks, a: int, b: int) -> list[int]:
    w = list(masks)
    w[a] &= ~(1 << b)
    w[b] &= ~(1 << a)
    return w


def _edge_pairs(masks):
    n = len(masks)
    return [(u, v) for u in range(n) for v in range(u + 1, n) if masks[u] >> v & 1]


def _es_below(masks, bound: int) -> bool:
    """Whether es < bound for the graph ``masks``, raising if es is undefined."""
    chi = kernels.chromatic_number(masks)[0]
    if chi <= 1:
        raise UndefinedInvariantError(f"es_chi is undefined for chi={chi}")
    if chi == 2:
        return sum(bin(x).count("1") for x in masks) // 2 < bound
    if chi == 3:
        return kernels.frustration(masks)[0] < bound
    cost, _ = kernels.min_mono_partition(masks, chi - 1, bound - 1)
    return cost < bound


def critical_from_masks(masks, chi: int, es: int) -> bool:
    """Criticality given chi and es already computed for ``masks``."""
    edges = _edge_pairs(masks)
    if not edges:
        return False
    if es == 1 and len(edges) >= 2:
        # es(G-e) >= 1 whenever it is defined, so no strict drop.
        return False
    if chi == 2 and len(edges) >= 2:
        return True
    return all(_es_below(_without(masks, a, b), es) for a, b in edges)


def _critical(g: Graph, chi: int, es: int) -> bool:
    return critical_from_masks(g.masks, chi, es)


def is_edge_stability_critical(g: Graph) -> bool:
    """True iff es(G-e) < es(G) for every edge e.

    Raises UndefinedInvariantError when es(G) or some es(G-e) is undefined,
    which for a graph with at least one edge only happens for a single edge.
    """
    chi = _chi(g)
    if chi <= 1:
        raise UndefinedInvariantError(f"es_chi is undefined for chi={chi}")
    es, _ = edge_stability(g, chi=chi)
    return _critical(g, chi, es)


def classify_critical(g: Graph) -> tuple[int, int] | None:
    """``(chi, es)`` when ``g`` is edge-stability critical, else None."""
    chi = _chi(g)
    if chi <= 1:
        raise UndefinedInvariantError(f"es_chi is undefined for chi={chi}")
    es, _ = edge_stability(g, chi=chi)
    if _critical(g, chi, es):
        return chi, es
    return None


def recognize_32_critical_fast(g: Graph) -> bool:
    """(3,2)-criticality via 2-colorability tests plus an exact chi=3 check.

    For every edge e, G-e must contain an odd cycle and some edge f on a
    shortest odd cycle of G-e must leave G-{e,f} bipartite (f lies on every
    odd cycle of G-e, so a shortest one suffices). K4 meets both conditions,
    hence the final chromatic test.
    """
    if g.m < 2:
        return False
    if not kernels.fast32_conditions(g.masks):
        return False
    return _chi(g) == 3


def analyze(g: Graph, families: bool = True, cutoff: int = CENSUS_CUTOFF) -> CriticalityRecord:
    """Full criticality record; graphs with chi <= 1 get ``es=None``."""
    chi = _chi(g)
    census = count_odd_cycles(g, cutoff=cutoff)
    tags: tuple[str, ...] = ()
    if families:
        from .families import classify_family

        tags = tuple(sorted(t.value for t in classify_family(g)))
    if chi <= 1:
        return CriticalityRecord(chi, None, (), False, None, census, tags)
    es, wit = edge_stability(g, chi=chi)
    try:
        crit = _critical(g, chi, es)
    except UndefinedInvariantError:
        crit = False
    return CriticalityRecord(chi, es, tuple(wit), crit, (chi, es) if crit else None, census, tags)
