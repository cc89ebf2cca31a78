from __future__ import annotations

import json
import subprocess
import sys

import pytest

from chromastab.cli import main


def run(capsys, *argv, stdin=None, monkeypatch=None):
    if stdin is not None:
        import io

        monkeypatch.setattr(sys, "stdin", io.StringIO(stdin))
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_analyze_butterfly(capsys):
    code, out, _ = run(capsys, "analyze", "--g6", "DK{")
    d = json.loads(out)
    assert code == 0
    assert (d["chi"], d["es"], d["critical"], d["kl"], d["families"]) == (3, 2, True, [3, 2], ["B"])


def test_analyze_c5(capsys):
    code, out, _ = run(capsys, "analyze", "--g6", "Dhc")
    d = json.loads(out)
    assert (code, d["chi"], d["es"], d["critical"]) == (0, 3, 1, False)


def test_analyze_malformed(capsys):
    code, _, err = run(capsys, "analyze", "--g6", "!!")
    assert code == 2 and "offset" in err


def test_input_precedence(capsys, tmp_path, monkeypatch):
    f = tmp_path / "g.txt"
    f.write_text("3 2\n0 1\n1 2\n")
    code, out, _ = run(capsys, "analyze", "--file", str(f))
    assert json.loads(out)["kl"] == [2, 2]
    code, out, _ = run(capsys, "analyze", "--g6", "DK{", "--file", str(f))
    assert json.loads(out)["graph6"] == "DK{"
    code, out, _ = run(capsys, "analyze", stdin="Dhc\n", monkeypatch=monkeypatch)
    assert json.loads(out)["graph6"] == "Dhc"
    code, _, _ = run(capsys, "analyze", "--file", str(tmp_path / "missing"))
    assert code == 2


def test_analyze_method(capsys):
    code, out, _ = run(capsys, "analyze", "--g6", "C~", "--method", "subset")
    d = json.loads(out)
    assert d["es"] == 1 and d["method"] == "subset"


def test_generate(capsys):
    code, out, _ = run(capsys, "generate", "--family", "A", "--params", "1,1")
    assert code == 0 and json.loads(out)["graph6"] == "EwCW"
    code, out, _ = run(capsys, "generate", "--family", "C", "--lengths", "1,3,2,2")
    assert json.loads(out)["n"] == 6
    code, out, _ = run(capsys, "generate", "--family", "E", "--cycles", "4:1,4:2")
    assert json.loads(out)["m"] == 8
    code, _, err = run(capsys, "generate", "--family", "C", "--params", "1,1,2,2")
    assert code == 2 and "parallel" in err
    code, _, _ = run(capsys, "generate", "--family", "D", "--params", "1,1,1,1,1,3", "--pattern", "ii")
    assert code == 2


def test_recognize(capsys):
    code, out, _ = run(capsys, "recognize", "--g6", "DK{", "--expect")
    assert code == 0 and json.loads(out)["critical_32"]
    code, out, _ = run(capsys, "recognize", "--g6", "C~", "--expect")
    assert code == 1 and not json.loads(out)["critical_32"]
    code, _, _ = run(capsys, "recognize", "--g6", "C~")
    assert code == 0


def test_scan(capsys, tmp_path):
    csv_path = tmp_path / "rows.csv"
    code, out, _ = run(capsys, "scan", "--max-n", "6", "--check", "theorem1", "--csv", str(csv_path))
    d = json.loads(out)
    assert code == 0 and d["theorem1_holds"] is True
    assert d["theorem1_set_equality"]["holds"]
    assert csv_path.read_text().startswith("graph6,n,m,chi,es,critical,k,l,odd_cycles,saturated,families")
    code, _, _ = run(capsys, "scan", "--max-n", "4", "--check", "bogus")
    assert code == 2
    code, _, _ = run(capsys, "scan")
    assert code == 2


def test_scan_input_file(capsys, tmp_path):
    f = tmp_path / "in.g6"
    f.write_text("DK{\nA_\n!!\n")
    code, out, _ = run(capsys, "scan", "--input", str(f))
    d = json.loads(out)
    assert code == 0 and d["graphs_total"] == 2 and len(d["parse_errors"]) == 1


def test_reduce(capsys):
    code, out, _ = run(capsys, "reduce", "--g6", "Dhc", "--vertex", "0", "--k", "3")
    assert code == 0 and json.loads(out)["equivalent"] is True
    code, _, _ = run(capsys, "reduce", "--g6", "Dhc", "--vertex", "9", "--k", "3")
    assert code == 2


def test_subdivision(capsys):
    code, out, _ = run(capsys, "subdivision", "--g6", "C~")
    d = json.loads(out)
    assert d["found"] and d["pattern"] == "K4"
    code, out, _ = run(capsys, "subdivision", "--g6", "DK{", "--expect")
    assert code == 1 and not json.loads(out)["found"]
    code, out, _ = run(capsys, "subdivision", "--g6", "C~", "--pattern", "K2_4")
    assert not json.loads(out)["found"]


def test_census_and_extend(capsys, monkeypatch):
    code, out, _ = run(capsys, "census", "--n", "4", "--connected")
    assert json.loads(out)["count"] == 6
    code, out, _ = run(capsys, "census", "--n", "4", "--graph6")
    lines = out.split()
    assert len(lines) == 11
    code, out, _ = run(capsys, "extend", stdin="\n".join(lines), monkeypatch=monkeypatch)
    assert len(out.split()) == 34
    code, _, _ = run(capsys, "census", "--n", "10")
    assert code == 2


def test_byte_identical_output(capsys):
    _, a, _ = run(capsys, "analyze", "--g6", "E`]o")
    _, b, _ = run(capsys, "analyze", "--g6", "E`]o")
    assert a == b


@pytest.mark.parametrize("sub", ["analyze", "generate", "recognize", "scan", "reduce", "subdivision", "census", "extend"])
def test_help_and_unknown_flags(sub):
    r = subprocess.run([sys.executable, "-m", "chromastab", sub, "--help"], capture_output=True, text=True)
    assert r.returncode == 0 and "usage" in r.stdout
    r = subprocess.run([sys.executable, "-m", "chromastab", sub, "--no-such-flag"], capture_output=True, text=True)
    assert r.returncode == 2
