import json

import pytest

from findual import cli
from findual.report import Report


def run(capsys, *argv):
    code = cli.main([str(a) for a in argv])
    out = capsys.readouterr()
    return code, out.out, out.err


def test_free_2(capsys):
    code, out, _ = run(capsys, "free", 2, "--format", "json-report")
    rep = json.loads(out)
    assert code == 0 and rep["ok"]
    size, cube, table = rep["children"]
    assert size["witness"]["elements"] == 6
    assert cube["ok"] and table["witness"]["mismatches"] == []


def test_omega_demo(capsys):
    code, out, _ = run(capsys, "omega-demo")
    assert code == 0 and out.count("[PASS]") == 5


def test_dual_of_chain_emits_two_chain_dot(capsys, fixtures_dir, tmp_path):
    report = tmp_path / "r.json"
    code, out, _ = run(capsys, "dual", fixtures_dir / "chain3.json", "--format", "dot",
                       "--report", report)
    assert code == 0
    assert out.startswith("digraph") and out.count("->") == 1
    assert json.loads(report.read_text())["ok"]


@pytest.mark.parametrize("argv", [
    ["maximal", "square.json"],
    ["qmax", "cycle3.json", "--subset", "u,v"],
    ["relativize", "k4_frame.json", "--subset", "q,r"],
    ["relativize", "modal2.json", "--element", "a"],
    ["clmax", "chain3.json"],
    ["booleanize", "chain3.json"],
    ["dual", "cycle3.json"],
    ["dual", "tense_chain2.json"],
    ["dual", "diamond.json"],
    ["dot", "cycle3.json", "--format", "dot"],
])
def test_subcommands_succeed_on_fixtures(capsys, fixtures_dir, argv):
    argv = [argv[0], fixtures_dir / argv[1], *argv[2:]]
    code, out, err = run(capsys, *argv)
    assert code == 0, err
    assert out


def test_dual_output_parses_back(capsys, fixtures_dir, tmp_path):
    out_file = tmp_path / "dual.json"
    code, _, _ = run(capsys, "dual", fixtures_dir / "diamond.json", "--out", out_file)
    assert code == 0
    code, out, _ = run(capsys, "dual", out_file)
    assert code == 0 and "round_trip_lattice" in out


def test_parse_error_exit_code(capsys, tmp_path):
    bad = tmp_path / "bad.json"
    bad.write_text('{"format-version": 1,\n  "kind": "poset" "elements": []}')
    code, _, err = run(capsys, "dual", bad)
    assert code == 2 and "bad.json:2:19" in err


def test_capacity_exit_code(capsys):
    code, _, err = run(capsys, "free", 4, "--max-size", 100)
    assert code == 3 and "bound 100" in err


def test_unknown_name_is_input_error(capsys, fixtures_dir):
    code, _, err = run(capsys, "qmax", fixtures_dir / "cycle3.json", "--subset", "zz")
    assert code == 2 and "zz" in err


def test_verdict_failure_exit_code(capsys, monkeypatch):
    monkeypatch.setattr(cli, "verify_example", lambda k: Report("forced", False))
    code, out, _ = run(capsys, "omega-demo")
    assert code == 1 and "[FAIL]" in out


def test_check_is_deterministic(capsys):
    a = run(capsys, "check", "--only", "duality", "famax", "--format", "json-report")
    b = run(capsys, "check", "--only", "duality", "famax", "--format", "json-report")
    ra, rb = json.loads(a[1]), json.loads(b[1])
    for r in (ra, rb):
        for c in r["children"]:
            c["witness"].pop("seconds")
    assert a[0] == 0 and ra == rb
    assert {c["name"].split(":")[0] for c in ra["children"]} == {"duality", "famax"}
    assert all("passed" in c["witness"] for c in ra["children"])
