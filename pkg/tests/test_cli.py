import io
import json
import subprocess
import sys

import pytest

from graphinv.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def write_graph(tmp_path, name, n, edges):
    p = tmp_path / name
    p.write_text(json.dumps({"n": n, "edges": [list(e) for e in edges]}))
    return str(p)


def test_degree_plain(capsys):
    code, out, err = run(capsys, "degree", "--weights", "1,1,1,1,1,1,1,1")
    assert code == 0 and err == ""
    assert out == "40\n"


def test_degree_boundary_note(capsys):
    code, out, _ = run(capsys, "degree", "--weights", "2,1,1")
    assert code == 0
    lines = out.splitlines()
    assert lines[0] == "1"
    assert "boundary" in lines[1]


def test_degree_trace(capsys):
    code, out, _ = run(capsys, "degree", "--weights", "1,1,1,1,1,1", "--trace")
    assert code == 0
    lines = out.splitlines()
    assert lines[-1] == "3"
    assert any("multigraph" in s for s in lines)


def test_degree_odd_total_exits_2(capsys):
    code, out, err = run(capsys, "degree", "--weights", "1,1,1")
    assert code == 2 and out == ""
    assert err.startswith("error: OddTotalWeight:")
    assert "double" in err


def test_degree_json_shape_and_determinism(capsys):
    reports = []
    for _ in range(2):
        code, out, _ = run(capsys, "degree", "--weights", "2,1,1", "--format", "json")
        assert code == 0
        rep = json.loads(out)
        assert set(rep) == {"command", "inputs", "outputs", "checks", "seed", "timing_ms"}
        rep.pop("timing_ms")
        reports.append(json.dumps(rep, sort_keys=True))
    assert reports[0] == reports[1]
    rep = json.loads(reports[0])
    assert rep["outputs"] == {"degree": 1, "boundary": True}
    assert rep["command"] == "degree" and rep["seed"] == 0


def test_relations_counts(capsys):
    code, out, _ = run(capsys, "relations", "--n", "8", "--type", "simple-binomial")
    assert code == 0 and len(out.splitlines()) == 35
    code, out, _ = run(capsys, "relations", "--n", "4", "--type", "plucker")
    assert code == 0 and len(out.splitlines()) == 1
    code, out, _ = run(capsys, "relations", "--n", "6", "--type", "segre", "--format", "json")
    assert code == 0
    rep = json.loads(out)
    assert rep["outputs"]["count"] == 1
    assert len(rep["outputs"]["relations"][0]["terms"]) == 6


def test_relations_bad_exponent(capsys):
    code, _, err = run(capsys, "relations", "--n", "6", "--type", "odd-power", "--exponent", "4")
    assert code == 2
    assert err.startswith("error: BadExponent:")


def test_basis_default_weights(capsys):
    code, out, _ = run(capsys, "basis", "--n", "6")
    assert code == 0
    lines = out.splitlines()
    assert len(lines) == 5
    assert lines[0] == "(1-2)(3-4)(5-6)"


def test_basis_weight_mismatch(capsys):
    code, _, err = run(capsys, "basis", "--n", "4", "--weights", "1,1,1")
    assert code == 2 and "weights" in err


def test_eval_from_file_and_points(capsys, tmp_path):
    gpath = write_graph(tmp_path, "g.json", 4, [(1, 3), (2, 4)])
    code, out, _ = run(capsys, "eval", "--graph", gpath, "--points", "0,1,2,3")
    assert code == 0 and out == "4\n"


def test_eval_graph_from_stdin(capsys, monkeypatch):
    monkeypatch.setattr(sys, "stdin", io.StringIO('{"n": 4, "edges": [[1, 2], [3, 4]]}'))
    code, out, _ = run(capsys, "eval", "--graph", "-", "--points", "0,1,2,5")
    assert code == 0 and out == "3\n"


def test_straighten(capsys, tmp_path):
    gpath = write_graph(tmp_path, "x.json", 4, [(1, 3), (2, 4)])
    code, out, _ = run(capsys, "straighten", "--graph", gpath)
    assert code == 0
    assert out.splitlines() == ["+1 (1-2)(3-4)", "+1 (1-4)(2-3)"]


def test_kempe(capsys, tmp_path):
    gpath = write_graph(tmp_path, "c4.json", 4, [(1, 2), (2, 3), (3, 4), (1, 4)])
    code, out, _ = run(capsys, "kempe", "--graph", gpath, "--format", "json")
    assert code == 0
    rep = json.loads(out)
    prods = rep["outputs"]["products"]
    assert len(prods) == 2
    assert all(len(p["factors"]) == 2 for p in prods)


def test_check_ideal_segre6(capsys):
    code, out, _ = run(capsys, "check-ideal", "--candidate", "segre", "--n", "6")
    assert code == 0
    assert out == "not a member\n"


def test_check_ideal_segre8(capsys):
    code, out, _ = run(capsys, "check-ideal", "--candidate", "segre", "--n", "8", "--format", "json")
    assert code == 0
    rep = json.loads(out)
    assert rep["outputs"]["member"] is True
    assert len(rep["outputs"]["certificate"]) > 0


def test_check_ideal_needs_heavy_flag(capsys):
    code, _, err = run(capsys, "check-ideal", "--candidate", "segre", "--n", "10")
    assert code == 2 and "--heavy" in err


def test_chart_text_and_exit(capsys):
    code, out, _ = run(capsys, "chart", "--points", "0,0,1,inf")
    assert code == 0
    assert "verified: True" in out
    code, _, err = run(capsys, "chart", "--points", "0,1,0,2")
    assert code == 2 and err.startswith("error: NotInChart:")


def test_chart_json_entries(capsys):
    code, out, _ = run(capsys, "chart", "--points", "0,1,2,inf", "--format", "json")
    assert code == 0
    rep = json.loads(out)
    assert rep["outputs"]["verified"] is True
    assert rep["outputs"]["entries"] == {"2,3": "ok"}
    assert rep["outputs"]["chart"]["W"] == [["1/2"]]
    assert [c["name"] for c in rep["checks"]] == ["rank-at-most-1", "z-identity"]


def test_verify_all_only(capsys):
    code, out, _ = run(capsys, "verify-all", "--only", "counting")
    assert code == 0
    lines = out.splitlines()
    assert lines[-1] == "passed 1/1"
    assert lines[0].startswith("[PASS] counting")


def test_verify_all_quick(capsys):
    code, out, _ = run(capsys, "verify-all", "--quick")
    assert code == 0
    assert out.splitlines()[-1] == "passed 7/7"


def test_out_file(capsys, tmp_path):
    target = tmp_path / "report.json"
    code, out, _ = run(capsys, "degree", "--weights", "3,3,3,3", "--format", "json", "--out", str(target))
    assert code == 0 and out == ""
    rep = json.loads(target.read_text())
    assert rep["outputs"]["degree"] == 3


def test_no_arguments_is_usage_error(capsys):
    code, _, err = run(capsys, )
    assert code == 2
    assert "usage" in err


def test_console_script():
    proc = subprocess.run(
        ["graphinv", "degree", "--weights", "2,2,2,2,2"],
        capture_output=True,
        text=True,
    )
    assert proc.returncode == 0
    assert proc.stdout == "5\n"


def test_basis_json_round_trips_into_eval(capsys, tmp_path):
    code, out, _ = run(capsys, "basis", "--n", "4", "--format", "json")
    assert code == 0
    rep = json.loads(out)
    g = rep["outputs"]["graphs"][0]
    gpath = tmp_path / "b.json"
    gpath.write_text(json.dumps(g))
    code, out, _ = run(capsys, "eval", "--graph", str(gpath), "--points", "0,1,2,3")
    assert code == 0 and out == "1\n"
