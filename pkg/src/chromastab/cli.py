"""Command-line interface; every subcommand prints JSON on stdout.

Exit codes: 0 success, 1 a requested check failed, 2 usage or input error.
"""

from __future__ import annotations

import argparse
import json
import sys

from .errors import GraphFormatError, ParameterError, UndefinedInvariantError, UnsupportedOrderError
from .graph import Graph, parse_edge_list, parse_graph6, write_graph6

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


class InputError(Exception):
    pass


def _emit(obj) -> None:
    sys.stdout.write(json.dumps(obj, indent=2) + "\n")


def _parse_text(text: str) -> Graph:
    lines = [ln for ln in text.splitlines() if ln.strip()]
    if not lines:
        raise GraphFormatError("empty input")
    head = lines[0].split()
    if len(head) == 2 and all(t.lstrip("-").isdigit() for t in head):
        return parse_edge_list(text)
    return parse_graph6(lines[0].strip())


def read_graph(args) -> Graph:
    """Graph from ``--g6``, else ``--file``, else standard input."""
    if args.g6 is not None:
        return parse_graph6(args.g6)
    if args.file is not None:
        try:
            with open(args.file, encoding="ascii") as fh:
                return _parse_text(fh.read())
        except OSError as exc:
            raise InputError(f"cannot read {args.file}: {exc.strerror}") from None
    return _parse_text(sys.stdin.read())


def _graph_opts(p: argparse.ArgumentParser) -> None:
    p.add_argument("--g6", help="graph6 string")
    p.add_argument("--file", help="file with a graph6 line or an edge list 'n m' / 'u v' lines")


def _ints(text: str) -> list[int]:
    try:
        return [int(x) for x in text.split(",") if x.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}") from None


def _cycles(text: str) -> list[tuple[int, int]]:
    out = []
    for part in text.split(","):
        try:
            c, d = part.split(":")
            out.append((int(c), int(d)))
        except ValueError:
            raise argparse.ArgumentTypeError(f"expected LEN:OFFSET pairs, got {part!r}") from None
    return out


# -- commands -------------------------------------------------------------

def cmd_analyze(args) -> int:
    from .stability import analyze, edge_stability

    g = read_graph(args)
    rec = analyze(g)
    out = {"graph6": write_graph6(g), "n": g.n, "m": g.m}
    out.update(rec.as_dict())
    if args.method != "auto" and rec.es is not None:
        es, wit = edge_stability(g, method=args.method)
        out["es"], out["witness_set"] = es, [list(e) for e in wit]
    out["method"] = args.method
    _emit(out)
    return EXIT_OK


def cmd_generate(args) -> int:
    from .families import FamilyParams, generate, validate

    if args.family == "E":
        if not args.cycles:
            raise ParameterError("family E needs --cycles LEN:OFFSET,...")
        params = FamilyParams("E", cycles=tuple(args.cycles))
    else:
        if args.params is None:
            raise ParameterError(f"family {args.family} needs --params")
        params = FamilyParams(args.family, tuple(args.params), args.pattern)
    params = validate(params)
    g = generate(params)
    _emit(
        {
            "family": args.family,
            "lengths": list(params.lengths),
            "pattern": params.pattern,
            "cycles": [list(c) for c in params.cycles],
            "graph6": write_graph6(g),
            "n": g.n,
            "m": g.m,
        }
    )
    return EXIT_OK


def cmd_recognize(args) -> int:
    from .stability import recognize_32_critical_fast

    g = read_graph(args)
    ok = recognize_32_critical_fast(g)
    _emit({"graph6": write_graph6(g), "critical_32": ok})
    return EXIT_FAIL if args.expect and not ok else EXIT_OK


def cmd_scan(args) -> int:
    from .harness import CHECKS, isolate_free_census, scan_stream, verify_theorem1

    checks = None
    if args.check:
        checks = [c for item in args.check for c in item.split(",") if c]
        bad = sorted(set(checks) - set(CHECKS))
        if bad:
            raise InputError(f"unknown checks {bad}; choose from {', '.join(CHECKS)}")
    if args.input is not None:
        if args.input == "-":
            lines = sys.stdin.read().splitlines()
        else:
            try:
                with open(args.input, encoding="ascii") as fh:
                    lines = fh.read().splitlines()
            except OSError as exc:
                raise InputError(f"cannot read {args.input}: {exc.strerror}") from None
    elif args.max_n is not None:
        lines = isolate_free_census(args.max_n)
    else:
        raise InputError("scan needs --max-n or --input")
    report = scan_stream(lines, checks=checks, jobs=args.jobs)
    out = report.to_dict()
    failed = bool(out["lemma_violations"] or out["theorem_violations"])
    if args.max_n is not None and "theorem1" in report.checks:
        verdict = verify_theorem1(args.max_n, report=report)
        out["theorem1_set_equality"] = verdict.as_dict()
        failed = failed or not verdict.holds
    if args.csv:
        with open(args.csv, "w", encoding="ascii", newline="") as fh:
            fh.write(report.to_csv())
    _emit(out)
    return EXIT_FAIL if failed else EXIT_OK


def cmd_reduce(args) -> int:
    from .reduction import verify_reduction

    g = read_graph(args)
    res = verify_reduction(g, args.vertex, args.k)
    _emit(res.as_dict())
    return EXIT_OK if res.equivalent else EXIT_FAIL


def cmd_subdivision(args) -> int:
    from .subdivision import find_any_proposition9_pattern, find_subdivision

    g = read_graph(args)
    if args.pattern:
        emb = find_subdivision(g, args.pattern)
        hit = (emb.pattern, emb) if emb else None
    else:
        hit = find_any_proposition9_pattern(g)
    out = {"graph6": write_graph6(g), "found": hit is not None}
    if hit:
        out.update(hit[1].as_dict())
    _emit(out)
    return EXIT_FAIL if args.expect and hit is None else EXIT_OK


def cmd_census(args) -> int:
    from .harness import graph_census

    codes = graph_census(args.n, connected_only=args.connected)
    if args.isolate_free:
        from .graph import graph6_to_masks

        codes = [s for s in codes if all(graph6_to_masks(s))]
    if args.graph6:
        sys.stdout.write("".join(s + "\n" for s in codes))
    else:
        _emit({"n": args.n, "connected_only": args.connected, "isolate_free": args.isolate_free,
               "count": len(codes)})
    return EXIT_OK


def cmd_extend(args) -> int:
    from .harness import extend_census

    if args.input and args.input != "-":
        try:
            with open(args.input, encoding="ascii") as fh:
                text = fh.read()
        except OSError as exc:
            raise InputError(f"cannot read {args.input}: {exc.strerror}") from None
    else:
        text = sys.stdin.read()
    graphs = [parse_graph6(ln) for ln in text.splitlines() if ln.strip()]
    sys.stdout.write("".join(write_graph6(g) + "\n" for g in extend_census(graphs)))
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    from .harness import default_jobs

    ap = argparse.ArgumentParser(prog="chromastab", description="Chromatic edge-stability toolkit.")
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("analyze", help="chi, es_chi, criticality, odd cycles, families")
    _graph_opts(p)
    p.add_argument("--method", choices=("auto", "subset", "partition"), default="auto")
    p.set_defaults(func=cmd_analyze)

    p = sub.add_parser("generate", help="build a family member")
    p.add_argument("--family", required=True, choices=list("ABCDE"))
    p.add_argument("--params", "--lengths", dest="params", type=_ints,
                   help="k,l for A/B; four lengths for C; six for D (edges 01,02,03,12,13,23)")
    p.add_argument("--pattern", choices=("i", "ii", "iii"), help="D parity pattern (checked)")
    p.add_argument("--cycles", type=_cycles, help="E cycles as LEN:OFFSET,LEN:OFFSET,...")
    p.set_defaults(func=cmd_generate)

    p = sub.add_parser("recognize", help="fast (3,2)-criticality test")
    _graph_opts(p)
    p.add_argument("--expect", action="store_true", help="exit 1 unless the graph is (3,2)-critical")
    p.set_defaults(func=cmd_recognize)

    p = sub.add_parser("scan", help="theorem scan over a census or a graph6 stream")
    p.add_argument("--max-n", type=int, help="scan the built-in isolate-free census up to this order (<= 9)")
    p.add_argument("--input", help="graph6 stream file ('-' for stdin)")
    p.add_argument("--check", action="append", help="check name(s), repeatable or comma-separated")
    p.add_argument("--csv", help="write one CSV row per analyzed graph to this path")
    p.add_argument("--jobs", type=int, default=default_jobs(), help="worker processes (default $CHROMASTAB_JOBS or 1)")
    p.set_defaults(func=cmd_scan)

    p = sub.add_parser("reduce", help="clique gadget and the criticality equivalence")
    _graph_opts(p)
    p.add_argument("--vertex", type=int, required=True)
    p.add_argument("--k", type=int, required=True)
    p.set_defaults(func=cmd_reduce)

    p = sub.add_parser("subdivision", help="find a K2_4 / K4 / K3_221 / C4_2121 subdivision")
    _graph_opts(p)
    p.add_argument("--pattern", choices=("K2_4", "K4", "K3_221", "C4_2121"))
    p.add_argument("--expect", action="store_true", help="exit 1 when no subdivision is found")
    p.set_defaults(func=cmd_subdivision)

    p = sub.add_parser("census", help="count or list all graphs of one order (<= 9)")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--connected", action="store_true")
    p.add_argument("--isolate-free", action="store_true")
    p.add_argument("--graph6", action="store_true", help="print graph6 lines instead of JSON")
    p.set_defaults(func=cmd_census)

    p = sub.add_parser("extend", help="all order-n graphs from a complete order-(n-1) graph6 list")
    p.add_argument("--input", help="graph6 file (default stdin)")
    p.set_defaults(func=cmd_extend)
    return ap


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (GraphFormatError, ParameterError, UnsupportedOrderError, UndefinedInvariantError,
            InputError, ValueError) as exc:
        sys.stderr.write(f"chromastab: error: {exc}\n")
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
