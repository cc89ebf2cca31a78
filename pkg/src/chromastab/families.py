"""Generators and structural classifiers for the five (3,2)-critical families.

Labeling conventions used by :func:`generate`:

* A: the first cycle is ``0..2k`` in order, the second follows it.
* B: as A, but the second cycle reuses vertex 0.
* C: the two branch vertices are 0 and 1; the four paths follow in the
  given order, interior vertices numbered from 2 upwards.
* D: the branch vertices are 0..3; the six paths follow the edge order
  01, 02, 03, 12, 13, 23.
* E: glue vertex ``i`` (``0 <= i < k``) joins cycle ``i`` to cycle
  ``i-1``; cycle ``i`` consists of an arc of length ``d_i`` and one of
  length ``2n_i - d_i`` from glue ``i`` to glue ``i+1 mod k``.
"""

from __future__ import annotations

import enum
import itertools
from dataclasses import dataclass

from .errors import ParameterError
from .graph import Graph, canonical_form, components, drop_isolated

K4_EDGES = ((0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3))
D_TRIANGLES = ({0, 1, 3}, {0, 2, 4}, {1, 2, 5}, {3, 4, 5})
D_OPPOSITE = ({0, 5}, {1, 4}, {2, 3})


class FamilyTag(str, enum.Enum):
    A = "A"
    B = "B"
    C = "C"
    D = "D"
    E = "E"


@dataclass(frozen=True)
class FamilyParams:
    """Constructive parameters.

    ``lengths`` holds ``(k, l)`` for A and B, four path lengths for C and
    six for D. ``pattern`` ("i", "ii" or "iii") is only meaningful for D and
    is inferred from the parities when omitted. ``cycles`` holds the
    ``(2n_i, d_i)`` pairs of E.
    """

    variant: FamilyTag
    lengths: tuple[int, ...] = ()
    pattern: str | None = None
    cycles: tuple[tuple[int, int], ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "variant", FamilyTag(self.variant))
        object.__setattr__(self, "lengths", tuple(int(x) for x in self.lengths))
        object.__setattr__(self, "cycles", tuple((int(a), int(b)) for a, b in self.cycles))

    def order(self) -> int:
        t = self.variant
        if t is FamilyTag.A:
            return 2 * sum(self.lengths) + 2
        if t is FamilyTag.B:
            return 2 * sum(self.lengths) + 1
        if t in (FamilyTag.C, FamilyTag.D):
            return sum(self.lengths) - 2
        return sum(c for c, _ in self.cycles) - len(self.cycles)


def d_pattern(lengths) -> str | None:
    """Parity pattern of six K4 path lengths, or None if none applies."""
    odd = {i for i, x in enumerate(lengths) if x % 2}
    if len(odd) == 6:
        return "i"
    if len(odd) == 3 and odd in D_TRIANGLES:
        return "ii"
    if len(odd) == 2 and odd in D_OPPOSITE:
        return "iii"
    return None


def validate(p: FamilyParams) -> FamilyParams:
    """Return ``p`` (with the D pattern filled in) or raise ParameterError."""
    t = p.variant
    if t in (FamilyTag.A, FamilyTag.B):
        if len(p.lengths) != 2:
            raise ParameterError(f"family {t.value} takes two half-lengths (k, l)")
        if min(p.lengths) < 1:
            raise ParameterError("half-lengths k, l must be >= 1 (cycles of length >= 3)")
        return p
    if t is FamilyTag.C:
        if len(p.lengths) != 4:
            raise ParameterError("family C takes four path lengths")
        if min(p.lengths) < 1:
            raise ParameterError("path lengths must be >= 1")
        if sum(x % 2 for x in p.lengths) != 2:
            raise ParameterError("exactly two of the four paths must have odd length")
        if p.lengths.count(1) > 1:
            raise ParameterError("two paths of length 1 would create a parallel edge")
        return p
    if t is FamilyTag.D:
        if len(p.lengths) != 6:
            raise ParameterError("family D takes six path lengths (edge order 01,02,03,12,13,23)")
        if min(p.lengths) < 1:
            raise ParameterError("path lengths must be >= 1")
        pat = d_pattern(p.lengths)
        if pat is None:
            raise ParameterError(
                "odd paths must be all six, three forming a triangle, or two opposite edges"
            )
        if p.pattern is not None and p.pattern != pat:
            raise ParameterError(f"lengths realise pattern ({pat}), not ({p.pattern})")
        if pat == "i" and all(x == 1 for x in p.lengths):
            raise ParameterError("pattern (i) with all lengths 1 is K4 itself (chi = 4)")
        return FamilyParams(t, p.lengths, pat)
    if len(p.cycles) < 2:
        raise ParameterError("family E needs k >= 2 cycles")
    for c, d in p.cycles:
        if c < 4 or c % 2:
            raise ParameterError(f"cycle length {c} must be even and >= 4")
        if not 1 <= d <= c // 2:
            raise ParameterError(f"glue offset {d} must lie in 1..{c // 2}")
    if sum(d for _, d in p.cycles) % 2 == 0:
        raise ParameterError("the glue offsets must have odd sum")
    return p


class _Builder:
    def __init__(self, n0: int):
        self.n = n0
        self.edges: list[tuple[int, int]] = []

    def path(self, a: int, b: int, length: int):
        prev = a
        for _ in range(length - 1):
            self.edges.append((prev, self.n))
            prev = self.n
            self.n += 1
        self.edges.append((prev, b))

    def graph(self) -> Graph:
        return Graph(self.n, self.edges)


def generate(params: FamilyParams) -> Graph:
    p = validate(params)
    t = p.variant
    if t in (FamilyTag.A, FamilyTag.B):
        k, l = p.lengths
        b = _Builder(1)
        b.path(0, 0, 2 * k + 1)
        if t is FamilyTag.A:
            start = b.n
            b.n += 2 * l + 1
            b.edges += [(start + i, start + (i + 1) % (2 * l + 1)) for i in range(2 * l + 1)]
        else:
            b.path(0, 0, 2 * l + 1)
        return b.graph()
    if t is FamilyTag.C:
        b = _Builder(2)
        for x in p.lengths:
            b.path(0, 1, x)
        return b.graph()
    if t is FamilyTag.D:
        b = _Builder(4)
        for (u, v), x in zip(K4_EDGES, p.lengths):
            b.path(u, v, x)
        return b.graph()
    k = len(p.cycles)
    b = _Builder(k)
    for i, (c, d) in enumerate(p.cycles):
        b.path(i, (i + 1) % k, d)
        b.path(i, (i + 1) % k, c - d)
    return b.graph()


# -- classification -------------------------------------------------------

def branch_paths(g: Graph, branch: set[int]) -> list[tuple[int, int, int]] | None:
    """Maximal paths between branch vertices through degree-2 vertices.

    Returns ``(start, end, length)`` triples, each path once, or None if
    some vertex outside ``branch`` does not have degree 2 or a cycle avoids
    every branch vertex.
    """
    if any(g.degree(v) != 2 for v in range(g.n) if v not in branch and g.degree(v)):
        return None
    done = set()
    out = []
    seen = set(branch)
    for s in sorted(branch):
        for w in g.adjacency[s]:
            if (s, w) in done:
                continue
            prev, cur, length = s, w, 1
            while cur not in branch:
                seen.add(cur)
                a, b = g.adjacency[cur]
                prev, cur = cur, (b if a == prev else a)
                length += 1
            done.add((cur, prev))
            out.append((s, cur, length))
    if any(g.degree(v) and v not in seen for v in range(g.n)):
        return None
    return out


def _cycle_lengths(h: Graph) -> list[int] | None:
    if any(d != 2 for d in h.degrees()):
        return None
    return [len(c) for c in components(h)]


def _is_a(h: Graph) -> bool:
    lens = _cycle_lengths(h)
    return lens is not None and len(lens) == 2 and all(x % 2 for x in lens)


def _hubs(h: Graph, deg: int) -> set[int]:
    return {v for v in range(h.n) if h.degree(v) == deg}


def _is_b(h: Graph) -> bool:
    hubs = _hubs(h, 4)
    if len(hubs) != 1 or len(components(h)) != 1:
        return False
    paths = branch_paths(h, hubs)
    return paths is not None and len(paths) == 2 and all(x % 2 for _, _, x in paths)


def _is_c(h: Graph) -> bool:
    hubs = _hubs(h, 4)
    if len(hubs) != 2 or len(components(h)) != 1:
        return False
    paths = branch_paths(h, hubs)
    if paths is None or any(a == b for a, b, _ in paths):
        return False
    lens = [x for _, _, x in paths]
    return len(lens) == 4 and sum(x % 2 for x in lens) == 2 and lens.count(1) <= 1


def _is_d(h: Graph) -> bool:
    hubs = _hubs(h, 3)
    if len(hubs) != 4 or len(components(h)) != 1:
        return False
    paths = branch_paths(h, hubs)
    if paths is None:
        return False
    pos = {v: i for i, v in enumerate(sorted(hubs))}
    by_pair = {}
    for a, b, x in paths:
        key = tuple(sorted((pos[a], pos[b])))
        if a == b or key in by_pair:
            return False
        by_pair[key] = x
    if len(by_pair) != 6:
        return False
    lengths = [by_pair[e] for e in K4_EDGES]
    pat = d_pattern(lengths)
    return pat is not None and not (pat == "i" and all(x == 1 for x in lengths))


def _is_e(h: Graph) -> bool:
    hubs = _hubs(h, 4)
    if len(hubs) < 2 or len(components(h)) != 1:
        return False
    paths = branch_paths(h, hubs)
    if paths is None or any(a == b for a, b, _ in paths):
        return False
    pairs: dict[tuple[int, int], list[int]] = {}
    for a, b, x in paths:
        pairs.setdefault((min(a, b), max(a, b)), []).append(x)
    if len(hubs) == 2:
        (lens,) = pairs.values()
        # split the four paths into two even cycles with odd total offset
        for i in range(1, 4):
            rest = [j for j in range(1, 4) if j != i]
            c1 = lens[0] + lens[i]
            c2 = lens[rest[0]] + lens[rest[1]]
            if c1 % 2 == 0 and c2 % 2 == 0 and (lens[0] + lens[rest[0]]) % 2:
                return True
        return False
    # k >= 3: the hub multigraph is a cycle with every edge doubled
    if any(len(v) != 2 for v in pairs.values()) or len(pairs) != len(hubs):
        return False
    nbrs: dict[int, list[int]] = {v: [] for v in hubs}
    for a, b in pairs:
        nbrs[a].append(b)
        nbrs[b].append(a)
    if any(len(v) != 2 for v in nbrs.values()):
        return False
    if any(sum(v) % 2 for v in pairs.values()):
        return False
    return sum(v[0] for v in pairs.values()) % 2 == 1


def classify_family(g: Graph) -> set[FamilyTag]:
    """All families containing ``g`` up to isomorphism (isolated vertices ignored)."""
    h = drop_isolated(g)
    tags = set()
    for tag, test in (
        (FamilyTag.A, _is_a),
        (FamilyTag.B, _is_b),
        (FamilyTag.C, _is_c),
        (FamilyTag.D, _is_d),
        (FamilyTag.E, _is_e),
    ):
        if test(h):
            tags.add(tag)
    return tags


# -- enumeration ----------------------------------------------------------

def iter_family_params(tag: FamilyTag, max_vertices: int):
    """Every valid parameter set of ``tag`` with at most ``max_vertices`` vertices."""
    tag = FamilyTag(tag)
    N = max_vertices
    if tag in (FamilyTag.A, FamilyTag.B):
        extra = 2 if tag is FamilyTag.A else 1
        for k in range(1, N):
            for l in range(k, N):
                if 2 * k + 2 * l + extra <= N:
                    yield FamilyParams(tag, (k, l))
        return
    if tag in (FamilyTag.C, FamilyTag.D):
        parts = 4 if tag is FamilyTag.C else 6
        rng = range(1, N + 3 - (parts - 1) + 1)
        for lens in itertools.product(rng, repeat=parts):
            if tag is FamilyTag.C and list(lens) != sorted(lens):
                continue
            if sum(lens) - 2 > N:
                continue
            try:
                yield validate(FamilyParams(tag, lens))
            except ParameterError:
                continue
        return

    def rec(budget, acc):
        if len(acc) >= 2 and sum(d for _, d in acc) % 2:
            yield FamilyParams(tag, cycles=tuple(acc))
        for c in range(4, budget + 2, 2):
            if c - 1 > budget:
                break
            for d in range(1, c // 2 + 1):
                yield from rec(budget - (c - 1), acc + [(c, d)])

    # a cycle of length c contributes c-1 vertices once the glue is shared
    yield from rec(N, [])


def enumerate_family_members(tag: FamilyTag, max_vertices: int) -> list[Graph]:
    """Members with at most ``max_vertices`` vertices, one per isomorphism class.

    Sorted by order, then canonical string. Every graph is returned in its
    canonical labeling.
    """
    from .graph import parse_graph6

    seen = {}
    for p in iter_family_params(tag, max_vertices):
        g = generate(p)
        seen.setdefault(canonical_form(g), g.n)
    return [parse_graph6(s) for s in sorted(seen, key=lambda s: (seen[s], s))]
