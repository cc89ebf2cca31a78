"""Time the compiled kernels against the pure-Python mirror on a census workload.

    python benchmarks/bench_kernels.py --n 7 --repeat 3
"""

from __future__ import annotations

import argparse
import json
import timeit

from chromastab import _pykernels
from chromastab.graph import graph6_to_masks
from chromastab.harness import isolate_free_census

try:
    from chromastab import _ckernels
except ImportError:  # extension not built
    _ckernels = None


def _workloads(mod, graphs):
    def chi():
        for adj in graphs:
            mod.chromatic_number(adj)

    def frust():
        for adj in graphs:
            mod.frustration(adj)

    def partition():
        for adj in graphs:
            mod.min_mono_partition(adj, 2)

    def cycles():
        for adj in graphs:
            mod.cycle_census(adj, 5)

    def canon():
        for adj in graphs:
            mod.canonical_labeling(adj)

    return {"chromatic_number": chi, "frustration": frust, "min_mono_partition": partition,
            "cycle_census": cycles, "canonical_labeling": canon}


def main(argv=None) -> int:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--n", type=int, default=7, help="largest census order in the workload")
    ap.add_argument("--repeat", type=int, default=3)
    ap.add_argument("--json", action="store_true")
    args = ap.parse_args(argv)

    graphs = [graph6_to_masks(s) for s in isolate_free_census(args.n)]
    mods = [("python", _pykernels)] + ([("cython", _ckernels)] if _ckernels else [])
    rows = []
    for name in _workloads(_pykernels, graphs):
        times = {}
        for label, mod in mods:
            fn = _workloads(mod, graphs)[name]
            times[label] = min(timeit.repeat(fn, number=1, repeat=args.repeat))
        speedup = times["python"] / times["cython"] if "cython" in times else None
        rows.append({"kernel": name, **times, "speedup": speedup})

    if args.json:
        print(json.dumps({"graphs": len(graphs), "max_n": args.n, "rows": rows}, indent=2))
        return 0
    print(f"{len(graphs)} isolate-free graphs, n <= {args.n}, best of {args.repeat}")
    print(f"{'kernel':<20}{'python s':>10}{'cython s':>10}{'speedup':>9}")
    for r in rows:
        c = f"{r['cython']:10.3f}" if "cython" in r else f"{'n/a':>10}"
        s = f"{r['speedup']:8.1f}x" if r["speedup"] else f"{'n/a':>9}"
        print(f"{r['kernel']:<20}{r['python']:10.3f}{c}{s}")
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
