"""Exhaustive small-graph census and theorem scans."""

from __future__ import annotations

import csv
import io
import itertools
import json
import os
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Iterable, Iterator

from . import kernels
from .errors import GraphFormatError, UndefinedInvariantError, UnsupportedOrderError
from .families import FamilyTag, classify_family, enumerate_family_members
from .graph import (
    CANON_MAX_ORDER,
    Graph,
    canonical_masks,
    drop_isolated_masks,
    graph6_to_masks,
    masks_to_graph6,
    parse_graph6,
)
from .stability import critical_from_masks, es_from_masks
from .subdivision import embedding_subgraph, find_any_proposition9_pattern

BUILTIN_MAX_ORDER = 8
CENSUS_MAX_ORDER = 9
SCAN_CUTOFF = 5

CHECKS = (
    "theorem1",
    "theorem2",
    "theorem5",
    "theorem10",
    "lemma2",
    "lemma4",
    "lemma7",
    "lemma8",
    "prop9",
    "coincidence",
    "recognizer",
    "problem1",
)

ABCD = {FamilyTag.A.value, FamilyTag.B.value, FamilyTag.C.value, FamilyTag.D.value}


# -- census ---------------------------------------------------------------

def _popcount(x: int) -> int:
    return bin(x).count("1")


def _canon_key(masks) -> str:
    return masks_to_graph6(canonical_masks(masks))


def _extend(graphs, n: int) -> dict[str, list[int]]:
    """All graphs on ``n`` vertices obtained by adding a minimum-degree vertex."""
    out: dict[str, list[int]] = {}
    for adj in graphs:
        deg = [_popcount(x) for x in adj]
        for s in range(1 << (n - 1)):
            d = _popcount(s)
            if any(deg[w] + (s >> w & 1) < d for w in range(n - 1)):
                continue
            new = list(adj) + [s]
            for w in range(n - 1):
                if s >> w & 1:
                    new[w] |= 1 << (n - 1)
            key = _canon_key(new)
            if key not in out:
                out[key] = canonical_masks(new)
    return out


@lru_cache(maxsize=None)
def _census(n: int) -> tuple[str, ...]:
    if n == 0:
        return ("?",)
    if n == 1:
        return ("@",)
    prev = [graph6_to_masks(s) for s in _census(n - 1)]
    return tuple(sorted(_extend(prev, n)))


def _connected(masks) -> bool:
    n = len(masks)
    if n == 0:
        return False
    comp = frontier = 1
    while frontier:
        nb = 0
        for v in range(n):
            if frontier >> v & 1:
                nb |= masks[v]
        frontier = nb & ~comp
        comp |= frontier
    return comp == (1 << n) - 1


def graph_census(n: int, connected_only: bool = False) -> list[str]:
    """Canonical graph6 strings of all graphs of order ``n`` (``n <= 9``), sorted."""
    if n < 0:
        raise ValueError("order must be non-negative")
    if n > CENSUS_MAX_ORDER:
        raise UnsupportedOrderError(
            f"built-in census stops at n={CENSUS_MAX_ORDER}; feed an external graph6 "
            "stream (e.g. nauty geng) to scan_stream"
        )
    codes = _census(n)
    if connected_only:
        return [s for s in codes if _connected(graph6_to_masks(s))]
    return list(codes)


def enumerate_small_graphs(n: int, connected_only: bool = False) -> Iterator[Graph]:
    """One representative per isomorphism class of order ``n <= 8``."""
    if n > BUILTIN_MAX_ORDER:
        raise UnsupportedOrderError(
            f"the built-in enumerator supports n <= {BUILTIN_MAX_ORDER}; use scan_stream "
            "with an external graph6 stream (or graph_census / extend_census for n=9)"
        )
    for s in graph_census(n, connected_only):
        yield parse_graph6(s)


def extend_census(graphs: Iterable[Graph]) -> list[Graph]:
    """Given every graph of order n-1, every graph of order n (canonical labels)."""
    gs = list(graphs)
    if not gs:
        return []
    n = gs[0].n + 1
    if any(g.n != n - 1 for g in gs):
        raise ValueError("all input graphs must have the same order")
    if n > CANON_MAX_ORDER:
        raise UnsupportedOrderError(f"extension relies on canonical forms, n <= {CANON_MAX_ORDER}")
    out = _extend([list(g.masks) for g in gs], n)
    return [parse_graph6(s) for s in sorted(out)]


def isolate_free_census(max_n: int) -> Iterator[str]:
    """graph6 lines of every isolate-free graph with 2..max_n vertices."""
    for n in range(2, max_n + 1):
        for s in graph_census(n):
            if all(graph6_to_masks(s)):
                yield s


# -- per-graph analysis ---------------------------------------------------

def _cycle_sets(cyc):
    L = len(cyc)
    verts = set(cyc)
    edges = {(min(cyc[i], cyc[(i + 1) % L]), max(cyc[i], cyc[(i + 1) % L])) for i in range(L)}
    return verts, edges


def intersection_shape(c1, c2) -> tuple[int, int, bool]:
    """``(vertices, edges, is_path)`` of the intersection of two cycles.

    The intersection keeps the common vertices and the common edges; it is a
    path when it is nonempty and connected (a lone vertex counts).
    """
    v1, e1 = _cycle_sets(c1)
    v2, e2 = _cycle_sets(c2)
    vs = v1 & v2
    es = e1 & e2
    # a proper subgraph of a cycle is a disjoint union of paths
    return len(vs), len(es), bool(vs) and len(vs) - len(es) == 1


def _has_edge_path_pair(cycles) -> bool:
    for a, b in itertools.combinations(cycles, 2):
        nv, ne, path = intersection_shape(a, b)
        if path and ne >= 1:
            return True
    return False


def _chi_of(masks) -> int:
    return kernels.chromatic_number(masks)[0]


def _without_edges(masks, edges):
    w = list(masks)
    for a, b in edges:
        w[a] &= ~(1 << b)
        w[b] &= ~(1 << a)
    return w


def analyze_graph6(line: str, checks=CHECKS) -> dict:
    """Analyze one graph6 line; returns a row with any violations attached."""
    masks = graph6_to_masks(line)
    dropped = not all(masks)
    masks = drop_isolated_masks(masks)
    n = len(masks)
    if n <= CANON_MAX_ORDER:
        masks = canonical_masks(masks)
    g6 = masks_to_graph6(masks)
    m = sum(_popcount(x) for x in masks) // 2
    chi = _chi_of(masks)
    odd, total, sat, wit = kernels.cycle_census(masks, SCAN_CUTOFF, SCAN_CUTOFF)
    es = None
    witness: list = []
    crit = False
    if chi >= 2:
        es, witness = es_from_masks(masks, chi)
        try:
            crit = critical_from_masks(masks, chi, es)
        except UndefinedInvariantError:
            crit = False
    kl = (chi, es) if crit else None
    is32 = kl == (3, 2)
    degs = [_popcount(x) for x in masks]
    tags: list[str] = []
    if n and all(2 <= d <= 4 for d in degs):
        tags = sorted(t.value for t in classify_family(Graph.from_masks(masks)))
    row = {
        "graph6": g6,
        "n": n,
        "m": m,
        "chi": chi,
        "es": es,
        "critical": crit,
        "k": kl[0] if kl else None,
        "l": kl[1] if kl else None,
        "odd_cycles": odd,
        "saturated": sat,
        "families": tags,
        "isolates_dropped": dropped,
        "violations": [],
    }
    bad = row["violations"]
    exact = not sat
    checks = set(checks)

    if "coincidence" in checks and chi >= 2:
        if chi == 2 and es != m:
            bad.append(("coincidence", f"chi=2 but es={es} != |E|={m}"))
        if chi == 3:
            fr = kernels.frustration(masks)[0]
            part = kernels.min_mono_partition(masks, 2)[0]
            if not es == fr == part:
                bad.append(("coincidence", f"es={es} frustration={fr} partition={part}"))
        if _chi_of(_without_edges(masks, witness)) != chi - 1 or len(witness) != es:
            bad.append(("coincidence", "witness set does not lower chi by one"))
    if "recognizer" in checks:
        fast = m >= 2 and kernels.fast32_conditions(masks) and chi == 3
        if fast != is32:
            bad.append(("recognizer", f"fast={fast} definition={is32}"))
    if is32 and exact:
        if "theorem5" in checks and odd == 3:
            bad.append(("theorem5", "(3,2)-critical with exactly three odd cycles"))
        if "theorem2" in checks and odd == 2 and not {"A", "B"} & set(tags):
            bad.append(("theorem2", f"two odd cycles but families={tags}"))
        if "theorem10" in checks and odd == 4 and not {"C", "D"} & set(tags):
            bad.append(("theorem10", f"four odd cycles but families={tags}"))
        if "theorem1" in checks and not ABCD & set(tags):
            bad.append(("theorem1", f"critical with {odd} odd cycles outside A-D"))
    if "theorem1" in checks and ABCD & set(tags) and not (is32 and exact):
        bad.append(("theorem1", f"family member {tags} is not a (3,2)-critical graph with <= 4 odd cycles"))
    if "problem1" in checks and is32 and not tags:
        row["problem1_exception"] = True
    if "lemma2" in checks and exact and odd == 2:
        c1, c2 = wit
        nv, ne, _ = intersection_shape(c1, c2)
        if ne == 0 and nv > 1:
            bad.append(("lemma2", f"edge-disjoint odd cycles {c1} and {c2} share {nv} vertices"))
    if "lemma4" in checks and exact and odd == 3:
        for c1, c2 in itertools.combinations(wit, 2):
            nv, ne, path = intersection_shape(c1, c2)
            if nv and not path:
                bad.append(("lemma4", f"odd cycles {c1} and {c2} meet in a non-path"))
    if is32 and odd >= 3 and {"lemma7", "lemma8", "prop9"} & checks:
        _, _, _, allodd = kernels.cycle_census(masks, 0, 1 << 30)
        allodd = [tuple(c) for c in allodd]
        row["odd_cycles_exact"] = len(allodd)
        if "lemma7" in checks and not _has_edge_path_pair(allodd):
            bad.append(("lemma7", "no two odd cycles meet in a path with an edge"))
        if "lemma8" in checks:
            for c1, c2 in itertools.combinations(allodd, 2):
                if intersection_shape(c1, c2)[0] < 2:
                    bad.append(("lemma8", f"odd cycles {c1} and {c2} share fewer than two vertices"))
                    break
        if "prop9" in checks:
            g = Graph.from_masks(masks)
            hit = find_any_proposition9_pattern(g)
            if hit is None:
                bad.append(("prop9", "no subdivision of K2_4, K4, K3_221 or C4_2121"))
            else:
                sub = embedding_subgraph(g, hit[1])
                so = kernels.cycle_census(sub.masks, 2, 0)[0]
                row["prop9_pattern"] = hit[0].value
                if so < 2:
                    bad.append(("prop9", f"{hit[0].value} subdivision has fewer than two odd cycles"))
    if is32:
        row["witness_set"] = [list(e) for e in witness]
    return row


def _worker(item):
    lineno, line, checks = item
    try:
        return lineno, analyze_graph6(line, checks), None
    except (GraphFormatError, UnsupportedOrderError) as exc:
        return lineno, None, str(exc)


# -- reports --------------------------------------------------------------

CSV_FIELDS = ("graph6", "n", "m", "chi", "es", "critical", "k", "l", "odd_cycles", "saturated", "families")
LEMMAS = ("lemma2", "lemma4", "lemma7", "lemma8")


@dataclass
class ScanReport:
    checks: tuple[str, ...]
    rows: list[dict] = field(default_factory=list)
    parse_errors: list[dict] = field(default_factory=list)

    @property
    def orders(self) -> list[int]:
        return sorted({r["n"] for r in self.rows})

    def per_order(self) -> dict[str, dict]:
        out: dict[int, dict] = {}
        for r in self.rows:
            d = out.setdefault(
                r["n"],
                {"graphs": 0, "critical_32": 0, "by_odd_cycles": {"2": 0, "3": 0, "4": 0, ">=5": 0}},
            )
            d["graphs"] += 1
            if r["k"] == 3 and r["l"] == 2:
                d["critical_32"] += 1
                key = ">=5" if r["saturated"] else str(r["odd_cycles"])
                d["by_odd_cycles"][key] += 1
        return {str(n): out[n] for n in sorted(out)}

    def criticals(self) -> list[dict]:
        seen = {}
        for r in self.rows:
            if r["k"] == 3 and r["l"] == 2 and r["graph6"] not in seen:
                seen[r["graph6"]] = {
                    "graph6": r["graph6"],
                    "n": r["n"],
                    "m": r["m"],
                    "chi": r["chi"],
                    "es": r["es"],
                    "witness_set": r["witness_set"],
                    "odd_cycles": r["odd_cycles"],
                    "saturated": r["saturated"],
                    "families": r["families"],
                }
        return [seen[k] for k in sorted(seen, key=lambda s: (seen[s]["n"], s))]

    def critical_classes(self) -> dict[str, int]:
        hist: dict[tuple[int, int], int] = {}
        for r in self.rows:
            if r["critical"]:
                key = (r["k"], r["l"])
                hist[key] = hist.get(key, 0) + 1
        return {f"{k},{l}": hist[(k, l)] for k, l in sorted(hist)}

    def violations(self, names=None) -> list[dict]:
        out = []
        for r in self.rows:
            for check, detail in r["violations"]:
                if names is None or check in names:
                    out.append({"check": check, "graph6": r["graph6"], "detail": detail})
        return sorted(out, key=lambda v: (v["check"], v["graph6"], v["detail"]))

    def holds(self, check: str) -> bool | None:
        if check not in self.checks:
            return None
        return not self.violations({check})

    @property
    def problem1_exceptions(self) -> list[str]:
        if "problem1" not in self.checks:
            return []
        return sorted({r["graph6"] for r in self.rows if r.get("problem1_exception")})

    @property
    def normalized_isolates(self) -> int:
        return sum(1 for r in self.rows if r["isolates_dropped"])

    def to_dict(self) -> dict:
        return {
            "orders": self.orders,
            "graphs_total": len(self.rows),
            "normalized_isolates": self.normalized_isolates,
            "parse_errors": self.parse_errors,
            "checks": list(self.checks),
            "per_order": self.per_order(),
            "critical_classes": self.critical_classes(),
            "criticals": self.criticals(),
            "theorem1_holds": self.holds("theorem1"),
            "theorem2_holds": self.holds("theorem2"),
            "theorem5_holds": self.holds("theorem5"),
            "theorem10_holds": self.holds("theorem10"),
            "prop9_holds": self.holds("prop9"),
            "coincidence_holds": self.holds("coincidence"),
            "recognizer_holds": self.holds("recognizer"),
            "lemma_violations": self.violations(set(LEMMAS)),
            "theorem_violations": self.violations(set(CHECKS) - set(LEMMAS)),
            "problem1_exceptions": self.problem1_exceptions,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2)

    def to_csv(self) -> str:
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(CSV_FIELDS)
        for r in self.rows:
            w.writerow(
                [
                    r["graph6"],
                    r["n"],
                    r["m"],
                    r["chi"],
                    "" if r["es"] is None else r["es"],
                    int(r["critical"]),
                    "" if r["k"] is None else r["k"],
                    "" if r["l"] is None else r["l"],
                    r["odd_cycles"],
                    int(r["saturated"]),
                    "|".join(r["families"]),
                ]
            )
        return buf.getvalue()


def default_jobs() -> int:
    try:
        return max(1, int(os.environ.get("CHROMASTAB_JOBS", "1")))
    except ValueError:
        return 1


def scan_stream(lines: Iterable[str], checks: Iterable[str] | None = None, jobs: int | None = None) -> ScanReport:
    """Analyze every graph6 line; parse failures are recorded and skipped.

    Blank lines and lines starting with ``#`` are ignored. Rows are sorted by
    (order, canonical graph6), so the report does not depend on input order.
    """
    if checks is None:
        checks = CHECKS
    else:
        wanted = set(checks)
        unknown = wanted - set(CHECKS)
        if unknown:
            raise ValueError(f"unknown checks {sorted(unknown)}")
        checks = tuple(c for c in CHECKS if c in wanted)
    if jobs is None:
        jobs = default_jobs()
    items = (
        (i, ln.strip(), checks)
        for i, ln in enumerate(lines, 1)
        if ln.strip() and not ln.lstrip().startswith("#")
    )
    report = ScanReport(checks)
    if jobs > 1:
        import multiprocessing

        with multiprocessing.Pool(jobs) as pool:
            results = list(pool.imap_unordered(_worker, items, chunksize=512))
    else:
        results = [_worker(it) for it in items]
    for lineno, row, err in results:
        if err is not None:
            report.parse_errors.append({"line": lineno, "error": err})
        else:
            report.rows.append(row)
    report.rows.sort(key=lambda r: (r["n"], r["graph6"]))
    report.parse_errors.sort(key=lambda e: e["line"])
    return report


# -- theorem 1 ------------------------------------------------------------

@dataclass(frozen=True)
class Theorem1Verdict:
    holds: bool
    max_n: int
    criticals: tuple[str, ...]
    family_members: tuple[str, ...]
    only_in_scan: tuple[str, ...]
    only_in_families: tuple[str, ...]

    def as_dict(self) -> dict:
        return {
            "holds": self.holds,
            "max_n": self.max_n,
            "criticals": list(self.criticals),
            "family_members": list(self.family_members),
            "only_in_scan": list(self.only_in_scan),
            "only_in_families": list(self.only_in_families),
        }


def verify_theorem1(max_n: int, lines: Iterable[str] | None = None, report: ScanReport | None = None,
                    jobs: int | None = None) -> Theorem1Verdict:
    """Compare (3,2)-criticals with at most four odd cycles against A-D members.

    Without ``lines`` or ``report`` the built-in census (``max_n <= 9``) is
    scanned. Both sides are canonical graph6 sets restricted to orders
    ``<= max_n``.
    """
    if report is None:
        if lines is None:
            lines = isolate_free_census(max_n)
        report = scan_stream(lines, checks=("theorem1",), jobs=jobs)
    scanned = {
        r["graph6"]
        for r in report.rows
        if r["k"] == 3 and r["l"] == 2 and not r["saturated"] and r["n"] <= max_n
    }
    members = set()
    if max_n >= 5:
        for tag in (FamilyTag.A, FamilyTag.B, FamilyTag.C, FamilyTag.D):
            members.update(_canon_key(list(g.masks)) for g in enumerate_family_members(tag, max_n))

    def order(s):
        return sorted(s, key=lambda x: (ord(x[0]), x))

    return Theorem1Verdict(
        scanned == members,
        max_n,
        tuple(order(scanned)),
        tuple(order(members)),
        tuple(order(scanned - members)),
        tuple(order(members - scanned)),
    )
