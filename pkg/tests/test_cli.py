import json
import subprocess
import sys

import pytest

from signedcayley.cayley import parse_cayley_spec, build_cayley
from signedcayley.cli import run
from signedcayley.graphs import read_graph
from signedcayley.groups import catalog_group, load_group


def test_gamma_cycle(capsys):
    assert run(["gamma", "--graph", "cycle:7"]) == 0
    assert capsys.readouterr().out == "3\n"


def test_gamma_mobius_from_z8(capsys):
    assert run(["gamma", "--group", "cyclic:8", "--gens", "1,4,7"]) == 0
    assert capsys.readouterr().out == "6\n"


def test_gamma_json(capsys):
    assert run(["gamma", "--cayley", "dihedral:8:s,rs,r2", "--json"]) == 0
    doc = json.loads(capsys.readouterr().out)
    assert doc["n"] == 8 and doc["gamma"] == 6 and doc["method"] == "branch_and_bound"


@pytest.mark.parametrize("source", [["--graph", "cycle:11"], ["--graph", "cube:3"],
                                    ["--cayley", "Q8:i,-i,j,-j"], ["--cayley", "A4:(12)(34),(123),(132)"],
                                    ["--group", "direct_product:2x6", "--gens", "(1,0),(0,1),(0,5)"]])
def test_naive_and_bnb_agree(source, capsys):
    run(["gamma", *source])
    a = capsys.readouterr().out
    run(["gamma", *source, "--method", "naive"])
    assert capsys.readouterr().out == a


def test_not_inverse_closed_names_element(capsys):
    assert run(["gamma", "--group", "cyclic:8", "--gens", "1,4"]) == 2
    err = capsys.readouterr().err
    assert "'1'" in err and "inverse" in err


def test_malformed_group_spec(capsys):
    assert run(["gamma", "--group", "cyclic:x", "--gens", "1"]) == 2
    assert run(["gamma", "--group", "blob:3", "--gens", "1"]) == 2
    assert run(["build", "--cayley", "Z6:9"]) == 2


def test_unknown_verb_and_flag():
    assert run(["frobnicate"]) == 2
    assert run(["gamma", "--graph", "cycle:7", "--bogus"]) == 2
    assert run(["gamma", "--graph", "cycle:7", "--method", "magic"]) == 2


def test_source_rules(capsys):
    assert run(["gamma"]) == 2
    assert run(["gamma", "--graph", "cycle:5", "--cayley", "Z4:1,3"]) == 2
    assert run(["gamma", "--group", "Z6"]) == 2
    assert run(["gamma", "--graph", "cycle:5", "--gens", "1"]) == 2


def test_build_round_trip(tmp_path, capsys):
    out = tmp_path / "g.txt"
    assert run(["build", "--cayley", "dihedral:12:r,r5,s", "--out", str(out)]) == 0
    g = build_cayley(parse_cayley_spec("dihedral:12:r,r5,s"))
    assert read_graph(out) == g
    dot = tmp_path / "g.dot"
    assert run(["build", "--cayley", "dihedral:12:r,r5,s", "--out", str(dot)]) == 0
    back = read_graph(dot)
    assert back == g and back.labels == g.labels


def test_build_stdout(capsys):
    assert run(["build", "--graph", "path:3"]) == 0
    assert capsys.readouterr().out == "3 2\n0 1\n1 2\n"


def test_group_verb(tmp_path, capsys):
    path = tmp_path / "q8.json"
    assert run(["group", "--group", "Q8", "--json", "--out", str(path)]) == 0
    info = json.loads(capsys.readouterr().out)
    assert info["order"] == 8 and info["involutions"] == 1 and not info["abelian"]
    assert load_group(path) == catalog_group("Q8")
    assert run(["gamma", "--group-file", str(path), "--gens", "i,-i"]) == 0
    assert capsys.readouterr().out == "4\n"


def test_group_file_errors(tmp_path):
    bad = tmp_path / "bad.json"
    bad.write_text('{"order": 2, "identity": 0, "names": ["e", "x"], "table": [[0, 1], [1, 1]]}')
    assert run(["group", "--group-file", str(bad)]) == 2
    assert run(["group", "--group-file", str(tmp_path / "missing.json")]) == 2


def test_enumerate_cubic(capsys):
    assert run(["enumerate-cubic", "--order", "8", "--json"]) == 0
    doc = json.loads(capsys.readouterr().out)
    assert doc["count"] == 2
    assert sorted(c["gamma"] for c in doc["classes"]) == [4, 6]
    assert run(["enumerate-cubic", "--order", "12", "--groups", "restricted"]) == 0
    assert "3 class(es)" in capsys.readouterr().out


def test_export_formats(tmp_path, capsys):
    assert run(["export", "--graph", "cycle:6", "--format", "json"]) == 0
    doc = json.loads(capsys.readouterr().out)
    assert doc["gamma"] == 2 and doc["labeling"] == [-1, 1, 1, -1, 1, 1]
    out = tmp_path / "c.dot"
    assert run(["export", "--graph", "cycle:6", "--out", str(out)]) == 0
    text = out.read_text()
    assert text.startswith("graph G {") and "0 [style=filled" in text


def test_audit_subset_exit_codes(tmp_path, capsys):
    out = tmp_path / "r.json"
    assert run(["audit", "--claim", "THM_N2_VALUE", "--max-order", "12", "--out", str(out)]) == 0
    assert json.loads(out.read_text())["claims"][0]["status"] == "Confirmed"
    assert run(["audit", "--claim", "FIG4_A4"]) == 1
    assert run(["audit", "--claim", "NOT_A_CLAIM"]) == 2
    assert run(["audit", "--max-order", "13"]) == 2


def test_audit_all_report(tmp_path, capsys):
    out = tmp_path / "report.json"
    assert run(["audit", "--claim", "all", "--max-order", "12", "--out", str(out)]) == 1
    doc = json.loads(out.read_text())
    assert len(doc["claims"]) == 14


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "signedcayley", "gamma", "--graph", "cycle:7"],
                          capture_output=True, text=True)
    assert proc.returncode == 0 and proc.stdout == "3\n"
