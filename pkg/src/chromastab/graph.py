"""Simple undirected graphs, graph6 / edge-list I/O, and cycle primitives."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, NamedTuple

from . import kernels
from .errors import GraphFormatError, UnsupportedOrderError

GRAPH6_MAX_ORDER = 62
CANON_MAX_ORDER = 12
GRAPH6_HEADER = ">>graph6<<"


class Edge(NamedTuple):
    u: int
    v: int


def _edge(a, b):
    a, b = int(a), int(b)
    return Edge(a, b) if a < b else Edge(b, a)


class Graph:
    """Immutable simple graph on vertices ``0..n-1``."""

    __slots__ = ("n", "edges", "adjacency", "masks", "_hash")

    def __init__(self, n: int, edges: Iterable = ()):
        if n < 0:
            raise ValueError("vertex count must be non-negative")
        masks = [0] * n
        norm = set()
        for a, b in edges:
            if a == b:
                raise ValueError(f"self-loop at vertex {a}")
            if not (0 <= a < n and 0 <= b < n):
                raise ValueError(f"edge ({a}, {b}) out of range for n={n}")
            e = _edge(a, b)
            if e in norm:
                raise ValueError(f"parallel edge {tuple(e)}")
            norm.add(e)
            masks[e.u] |= 1 << e.v
            masks[e.v] |= 1 << e.u
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "edges", frozenset(norm))
        object.__setattr__(self, "masks", tuple(masks))
        object.__setattr__(
            self,
            "adjacency",
            tuple(tuple(v for v in range(n) if m >> v & 1) for m in masks),
        )
        object.__setattr__(self, "_hash", hash((n, self.edges)))

    def __setattr__(self, name, value):
        raise AttributeError("Graph is immutable")

    @classmethod
    def from_masks(cls, masks) -> "Graph":
        n = len(masks)
        return cls(n, ((u, v) for u in range(n) for v in range(u + 1, n) if masks[u] >> v & 1))

    @property
    def m(self) -> int:
        return len(self.edges)

    def sorted_edges(self) -> list[Edge]:
        return sorted(self.edges)

    def degree(self, v: int) -> int:
        return len(self.adjacency[v])

    def degrees(self) -> list[int]:
        return [len(a) for a in self.adjacency]

    def has_edge(self, a: int, b: int) -> bool:
        return 0 <= a < self.n and 0 <= b < self.n and bool(self.masks[a] >> b & 1)

    def isolated_vertices(self) -> list[int]:
        return [v for v in range(self.n) if not self.masks[v]]

    def relabel(self, perm) -> "Graph":
        """Graph with vertex ``v`` renamed to ``perm[v]``."""
        return Graph(self.n, ((perm[a], perm[b]) for a, b in self.edges))

    def __eq__(self, other):
        if not isinstance(other, Graph):
            return NotImplemented
        return self.n == other.n and self.edges == other.edges

    def __hash__(self):
        return self._hash

    def __repr__(self):
        return f"Graph(n={self.n}, edges={sorted(tuple(e) for e in self.edges)})"


# -- constructors ---------------------------------------------------------

def cycle_graph(n: int) -> Graph:
    return Graph(n, ((i, (i + 1) % n) for i in range(n)))


def path_graph(n: int) -> Graph:
    """Path on ``n`` vertices."""
    return Graph(n, ((i, i + 1) for i in range(n - 1)))


def complete_graph(n: int) -> Graph:
    return Graph(n, ((i, j) for i in range(n) for j in range(i + 1, n)))


def disjoint_union(*graphs: Graph) -> Graph:
    edges, off = [], 0
    for g in graphs:
        edges.extend((a + off, b + off) for a, b in g.edges)
        off += g.n
    return Graph(off, edges)


def drop_isolated_masks(masks) -> list[int]:
    keep = [v for v in range(len(masks)) if masks[v]]
    if len(keep) == len(masks):
        return list(masks)
    out = []
    for v in keep:
        m = 0
        for i, w in enumerate(keep):
            if masks[v] >> w & 1:
                m |= 1 << i
        out.append(m)
    return out


def drop_isolated(g: Graph) -> Graph:
    """Remove isolated vertices, renumbering the rest in increasing order."""
    keep = [v for v in range(g.n) if g.masks[v]]
    if len(keep) == g.n:
        return g
    pos = {v: i for i, v in enumerate(keep)}
    return Graph(len(keep), ((pos[a], pos[b]) for a, b in g.edges))


def components(g: Graph) -> list[list[int]]:
    seen = 0
    out = []
    for s in range(g.n):
        if seen >> s & 1:
            continue
        comp = 1 << s
        frontier = comp
        while frontier:
            nb = 0
            for v in _bits(frontier):
                nb |= g.masks[v]
            frontier = nb & ~comp
            comp |= frontier
        seen |= comp
        out.append(list(_bits(comp)))
    return out


def is_connected(g: Graph) -> bool:
    return g.n > 0 and len(components(g)) == 1


def _bits(mask):
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


# -- graph6 ---------------------------------------------------------------

def parse_graph6(text: str) -> Graph:
    """Decode one graph6 string (short form, ``n <= 62``)."""
    return Graph.from_masks(graph6_to_masks(text))


def graph6_to_masks(text: str) -> list[int]:
    """Decode graph6 straight to adjacency bitmasks."""
    if text.startswith(GRAPH6_HEADER):
        text = text[len(GRAPH6_HEADER):]
    text = text.strip()
    if not text:
        raise GraphFormatError("empty graph6 input", 0)
    first = ord(text[0])
    if first == 126:
        raise GraphFormatError("long-form graph6 (n > 62) is not supported", 0)
    if not 63 <= first <= 125:
        raise GraphFormatError(f"invalid length byte {text[0]!r}", 0)
    n = first - 63
    nbits = n * (n - 1) // 2
    nchars = (nbits + 5) // 6
    payload = text[1:]
    if len(payload) < nchars:
        raise GraphFormatError(
            f"truncated payload: expected {nchars} bytes, got {len(payload)}", 1 + len(payload)
        )
    if len(payload) > nchars:
        raise GraphFormatError("trailing bytes after graph6 payload", 1 + nchars)
    bits = 0
    for i, ch in enumerate(payload):
        val = ord(ch) - 63
        if not 0 <= val < 64:
            raise GraphFormatError(f"invalid payload byte {ch!r}", 1 + i)
        bits = (bits << 6) | val
    pad = 6 * nchars - nbits
    if pad and bits & ((1 << pad) - 1):
        raise GraphFormatError("nonzero padding bits", nchars)
    bits >>= pad
    masks = [0] * n
    k = nbits - 1
    for j in range(1, n):
        for i in range(j):
            if bits >> k & 1:
                masks[i] |= 1 << j
                masks[j] |= 1 << i
            k -= 1
    return masks


def masks_to_graph6(masks) -> str:
    n = len(masks)
    if n > GRAPH6_MAX_ORDER:
        raise UnsupportedOrderError(f"graph6 short form supports n <= {GRAPH6_MAX_ORDER}, got {n}")
    bits = 0
    nbits = 0
    for j in range(1, n):
        row = masks[j]
        for i in range(j):
            bits = (bits << 1) | (row >> i & 1)
            nbits += 1
    pad = (-nbits) % 6
    bits <<= pad
    nchars = (nbits + pad) // 6
    chars = [chr(63 + ((bits >> (6 * (nchars - 1 - c))) & 63)) for c in range(nchars)]
    return chr(63 + n) + "".join(chars)


def write_graph6(g: Graph) -> str:
    """Encode ``g`` as graph6 without header."""
    return masks_to_graph6(g.masks)


# -- edge lists -----------------------------------------------------------

def parse_edge_list(text: str) -> Graph:
    """Parse ``"n m"`` followed by ``m`` lines ``"u v"``."""
    rows = [ln.split() for ln in text.splitlines() if ln.strip() and not ln.lstrip().startswith("#")]
    if not rows:
        raise GraphFormatError("empty edge list")
    try:
        header = [int(x) for x in rows[0]]
        if len(header) != 2:
            raise ValueError
        n, m = header
        edges = []
        for r in rows[1:]:
            if len(r) != 2:
                raise ValueError
            edges.append((int(r[0]), int(r[1])))
    except ValueError:
        raise GraphFormatError("edge list lines must hold two integers") from None
    if len(edges) != m:
        raise GraphFormatError(f"header announces {m} edges, found {len(edges)}")
    try:
        return Graph(n, edges)
    except ValueError as exc:
        raise GraphFormatError(str(exc)) from None


def write_edge_list(g: Graph) -> str:
    lines = [f"{g.n} {g.m}"] + [f"{u} {v}" for u, v in g.sorted_edges()]
    return "\n".join(lines) + "\n"


# -- bipartiteness and cycles ---------------------------------------------

@dataclass(frozen=True)
class BipartiteVerdict:
    bipartite: bool
    parts: tuple[frozenset, frozenset] | None = None
    odd_cycle: tuple[int, ...] | None = None

    def __bool__(self):
        return self.bipartite


def is_bipartite(g: Graph) -> BipartiteVerdict:
    """2-colorability with a certificate: the two sides, or an odd cycle.

    Sides are assigned by BFS from the lowest unvisited vertex, which lands
    on side 0.
    """
    cyc = kernels.shortest_odd_cycle(g.masks)
    if cyc is not None:
        return BipartiteVerdict(False, odd_cycle=tuple(cyc))
    side = [-1] * g.n
    for s in range(g.n):
        if side[s] >= 0 or not g.masks[s]:
            continue
        side[s] = 0
        queue = [s]
        for v in queue:
            for w in g.adjacency[v]:
                if side[w] < 0:
                    side[w] = side[v] ^ 1
                    queue.append(w)
    left = frozenset(v for v in range(g.n) if side[v] == 0)
    right = frozenset(v for v in range(g.n) if side[v] == 1)
    return BipartiteVerdict(True, parts=(left, right))


@dataclass(frozen=True)
class OddCycleCensus:
    odd_count: int
    total_count: int
    saturated: bool
    witnesses: tuple[tuple[int, ...], ...] = field(default=())


def count_odd_cycles(g: Graph, cutoff: int | None = None, max_witnesses: int | None = None) -> OddCycleCensus:
    """Enumerate simple cycles once each, counting the odd ones.

    With ``cutoff`` the enumeration stops after that many odd cycles and
    the census is marked saturated. Witnesses are kept up to
    ``max_witnesses`` (default: ``cutoff``, or 64 without a cutoff).
    """
    if cutoff is not None and cutoff < 1:
        raise ValueError("cutoff must be >= 1")
    if max_witnesses is None:
        max_witnesses = cutoff if cutoff is not None else 64
    odd, total, sat, wit = kernels.cycle_census(g.masks, cutoff or 0, max_witnesses)
    return OddCycleCensus(odd, total, sat, tuple(tuple(c) for c in wit))


def cycle_edges(cycle) -> set[Edge]:
    L = len(cycle)
    return {_edge(cycle[i], cycle[(i + 1) % L]) for i in range(L)}


def delete_edges(g: Graph, f) -> Graph:
    """``g`` minus the edge set ``f``; vertices are never renumbered."""
    drop = {_edge(a, b) for a, b in f}
    missing = drop - g.edges
    if missing:
        raise ValueError(f"not edges of the graph: {sorted(tuple(e) for e in missing)}")
    return Graph(g.n, g.edges - drop)


def canonical_labeling(g: Graph) -> list[int]:
    if g.n > CANON_MAX_ORDER:
        raise UnsupportedOrderError(
            f"canonical_form supports n <= {CANON_MAX_ORDER}; use an external canonicalizer "
            "(e.g. nauty's labelg) for larger graphs"
        )
    return kernels.canonical_labeling(g.masks)


def canonical_masks(masks) -> list[int]:
    """Adjacency masks of the canonical relabeling (no order check)."""
    lab = kernels.canonical_labeling(masks)
    pos = [0] * len(masks)
    for i, v in enumerate(lab):
        pos[v] = i
    out = [0] * len(masks)
    for v, row in enumerate(masks):
        m = 0
        for w in _bits(row):
            m |= 1 << pos[w]
        out[pos[v]] = m
    return out


def canonical_form(g: Graph) -> str:
    """graph6 string of the canonical relabeling; equal iff isomorphic."""
    canonical_labeling(g)  # order check
    return masks_to_graph6(canonical_masks(g.masks))


def canonical_graph(g: Graph) -> Graph:
    return parse_graph6(canonical_form(g))
