"""CLI commands, JSON output, exit codes, determinism."""

from __future__ import annotations

import json

import pytest

from spinroots import cli, coxeter
from spinroots.coxeter import RootSystem, SimpleRoots


def run(capsys, *argv):
    code = cli.main(list(argv))
    return code, capsys.readouterr().out


def test_roots_h3(capsys):
    code, out = run(capsys, "roots", "h3")
    assert code == 0
    assert "roots: 30" in out
    assert "verified: true" in out


def test_roots_json_file(tmp_path, capsys):
    path = tmp_path / "a3.json"
    code, _ = run(capsys, "roots", "a3", "--json", str(path))
    assert code == 0
    data = json.loads(path.read_text())
    assert len(data["roots"]) == 12
    back = RootSystem.from_json(data)
    assert back.group == "a3"
    assert len(back.roots) == 12


def test_unknown_group_is_usage_error(capsys):
    with pytest.raises(SystemExit) as exc:
        cli.main(["roots", "xyz"])
    assert exc.value.code == 2


def test_missing_command_is_usage_error(capsys):
    with pytest.raises(SystemExit) as exc:
        cli.main([])
    assert exc.value.code == 2


def test_spinors_b3(capsys):
    code, out = run(capsys, "spinors", "b3")
    assert code == 0
    assert "spinors: 48" in out
    assert "hurwitz+duals" in out
    assert "2O" in out


def test_spinors_from_two(capsys):
    code, out = run(capsys, "spinors", "h3", "--from-two")
    assert code == 0
    assert "spinors (from two generators): 120" in out


def test_spinors_a1x3(capsys):
    code, out = run(capsys, "spinors", "a1x3")
    assert code == 0
    assert "spinors: 8" in out
    assert "lipschitz" in out


def test_versors_h3(capsys):
    code, out = run(capsys, "versors", "h3")
    assert code == 0
    assert "rotoinversions: 45" in out
    assert "reflections: 15" in out
    assert "central inversion: present" in out
    assert "odd: 60" in out


def test_versors_a3(capsys):
    code, out = run(capsys, "versors", "a3")
    assert code == 0
    assert "central inversion: absent" in out


def test_versors_b3(capsys):
    code, out = run(capsys, "versors", "b3")
    assert code == 0
    assert "transformations: 48" in out


def test_cartan_a1x3(capsys):
    code, out = run(capsys, "cartan", "a1x3")
    assert code == 0
    rows = [line for line in out.splitlines() if line.startswith("  [")]
    assert rows == ["  [ 2  0  0 ]", "  [ 0  2  0 ]", "  [ 0  0  2 ]"]


def test_cartan_h3_contains_minus_tau(capsys):
    code, out = run(capsys, "cartan", "h3")
    assert code == 0
    assert "-τ" in out


def test_cartan_b3_has_sqrt2_entry(capsys):
    # unit-length simple roots make the off-diagonal -sqrt2, not an integer
    code, out = run(capsys, "cartan", "b3")
    assert code == 0
    assert "-√2" in out


def test_verify_table(capsys, tmp_path):
    path = tmp_path / "report.json"
    code, out = run(capsys, "verify-table", "--json", str(path))
    assert code == 0
    assert "table verified: all rows match" in out
    assert out.count(" ok") == 4
    report = json.loads(path.read_text())
    assert report["pass"] is True
    by_group = {row["group"]: row for row in report["rows"]}
    assert by_group["h3"] == {
        "group": "h3", "roots": 30, "order": 120, "spinors": 120,
        "binary": "2I", "rank4": "H4", "rank4_roots": 120,
        "pure_quat": True, "two_generators": True, "failed_cells": [],
    }
    assert by_group["a3"]["pure_quat"] is False
    assert by_group["b3"]["rank4_roots"] == 48


def test_json_outputs_are_deterministic(tmp_path, capsys):
    p1, p2 = tmp_path / "r1.json", tmp_path / "r2.json"
    run(capsys, "roots", "h3", "--json", str(p1))
    run(capsys, "roots", "h3", "--json", str(p2))
    assert p1.read_bytes() == p2.read_bytes()
    q1, q2 = tmp_path / "t1.json", tmp_path / "t2.json"
    run(capsys, "verify-table", "--json", str(q1))
    run(capsys, "verify-table", "--json", str(q2))
    assert q1.read_bytes() == q2.read_bytes()


def test_spinors_json_export(tmp_path, capsys):
    path = tmp_path / "spin.json"
    code, _ = run(capsys, "spinors", "a1x3", "--json", str(path))
    assert code == 0
    data = json.loads(path.read_text())
    assert data["group"] == "a1x3"
    assert len(data["spinors"]) == 8
    assert data["rank4"]["group"] == "A1x4"


def test_verify_table_exit_code_on_mismatch(monkeypatch, capsys):
    wrong = {g: dict(cells) for g, cells in cli.EXPECTED.items()}
    wrong["h3"]["roots"] = 31
    monkeypatch.setattr(cli, "EXPECTED", wrong)
    code, out = run(capsys, "verify-table")
    assert code == 1
    assert "h3.roots" in out


def test_negative_control_names_failing_cells():
    # swapping the b3 presets in under the a1x3 label must fail that row
    presets = {g: coxeter.simple_roots(g) for g in coxeter.GROUPS}
    presets["a1x3"] = SimpleRoots("a1x3", coxeter.simple_roots("b3").roots)
    report = cli.build_report(presets)
    assert report["pass"] is False
    by_group = {row["group"]: row for row in report["rows"]}
    assert "a1x3.roots" in by_group["a1x3"]["failed_cells"]
    assert "a1x3.binary" in by_group["a1x3"]["failed_cells"]
    for g in ("a3", "b3", "h3"):
        assert by_group[g]["failed_cells"] == []


def test_negative_control_broken_preset_reports_error():
    from spinroots.exactfield import FieldScalar
    presets = {g: coxeter.simple_roots(g) for g in coxeter.GROUPS}
    zero = (FieldScalar(0), FieldScalar(0), FieldScalar(0))
    presets["a3"] = SimpleRoots("a3", (coxeter.simple_roots("a3").roots[0],
                                       zero,
                                       coxeter.simple_roots("a3").roots[2]))
    report = cli.build_report(presets)
    assert report["pass"] is False
    by_group = {row["group"]: row for row in report["rows"]}
    assert "error" in by_group["a3"]
    assert by_group["a3"]["failed_cells"] == ["a3.pipeline"]
