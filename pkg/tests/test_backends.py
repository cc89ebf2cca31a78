from __future__ import annotations

import os
import subprocess
import sys

import pytest
from hypothesis import given, strategies as st

from chromastab import _pykernels, kernels

from conftest import graphs

compiled = [m for m in kernels.available_backends() if m is not _pykernels]
pytestmark = pytest.mark.skipif(not compiled, reason="compiled extension not built")
C = compiled[0] if compiled else None
P = _pykernels


def _adj(g):
    return list(g.masks)


@given(graphs(max_n=14))
def test_bipartite_and_short_odd_cycle(g):
    a = _adj(g)
    assert C.is_bipartite(a) == P.is_bipartite(a)
    assert C.shortest_odd_cycle(a) == P.shortest_odd_cycle(a)
    assert C.odd_cycle_packing(a) == P.odd_cycle_packing(a)


@given(graphs(max_n=10))
def test_frustration(g):
    a = _adj(g)
    assert C.frustration(a) == P.frustration(a)


@given(graphs(max_n=9), st.integers(1, 4), st.integers(0, 3))
def test_min_mono_partition(g, blocks, lower):
    a = _adj(g)
    assert C.min_mono_partition(a, blocks, lower) == P.min_mono_partition(a, blocks, lower)


@given(graphs(max_n=10), st.integers(1, 5))
def test_k_coloring_and_chi(g, k):
    a = _adj(g)
    assert C.k_coloring(a, k) == P.k_coloring(a, k)
    assert C.chromatic_number(a) == P.chromatic_number(a)


@given(graphs(max_n=9), st.integers(0, 6), st.integers(0, 8))
def test_cycle_census(g, cutoff, wit):
    a = _adj(g)
    assert C.cycle_census(a, cutoff, wit) == P.cycle_census(a, cutoff, wit)


@given(graphs(max_n=12))
def test_canonical_and_fast32(g):
    a = _adj(g)
    assert C.canonical_labeling(a) == P.canonical_labeling(a)
    assert C.fast32_conditions(a) == P.fast32_conditions(a)


def test_input_validation_matches():
    for mod in (C, P):
        with pytest.raises(ValueError):
            mod.is_bipartite([0b10, 0b00])  # asymmetric
        with pytest.raises(ValueError):
            mod.min_mono_partition([0], 0)


def test_pure_python_fallback_selected_by_env():
    env = dict(os.environ, CHROMASTAB_PURE_PYTHON="1")
    code = (
        "from chromastab import kernels, analyze, parse_graph6;"
        "print(kernels.BACKEND, analyze(parse_graph6('DK{')).k_l)"
    )
    r = subprocess.run([sys.executable, "-c", code], capture_output=True, text=True, env=env)
    assert r.stdout.split() == ["python", "(3,", "2)"]


def test_benchmark_script_runs(capsys):
    import importlib.util
    from pathlib import Path

    path = Path(__file__).resolve().parents[1] / "benchmarks" / "bench_kernels.py"
    spec = importlib.util.spec_from_file_location("bench_kernels", path)
    mod = importlib.util.module_from_spec(spec)
    spec.loader.exec_module(mod)
    assert mod.main(["--n", "4", "--repeat", "1", "--json"]) == 0
    assert '"kernel": "frustration"' in capsys.readouterr().out
