from __future__ import annotations

import json

import pytest

from exjordan.cli import EXIT_FAIL, EXIT_OK, EXIT_USAGE, RunConfig, UsageError, main


def test_verify_single_grading(capsys):
    assert main(["verify", "--grading", "cartan_bicayley_pair"]) == EXIT_OK
    assert "[PASS] grading cartan_bicayley_pair" in capsys.readouterr().out


def test_unknown_grading_is_usage_error(capsys):
    assert main(["verify", "--grading", "nosuch"]) == EXIT_USAGE
    assert "unknown grading" in capsys.readouterr().err
    assert main(["universal", "--grading", "nosuch"]) == EXIT_USAGE


def test_bad_arguments():
    assert main(["frobnicate"]) == EXIT_USAGE
    assert main(["verify", "--trials", "0"]) == EXIT_USAGE
    assert main(["tkk", "--grading", "cartan_albert"]) == EXIT_USAGE
    with pytest.raises(UsageError):
        RunConfig("verify", trials=0)


def test_universal_report(tmp_path, capsys):
    out = tmp_path / "report.json"
    assert main(["universal", "--grading", "z3_albert_pair", "--grading", "cartan_albert_pair",
                 "--json", str(out)]) == EXIT_OK
    doc = json.loads(out.read_text())
    assert doc["schema"] == "exjordan.report/1" and doc["ok"]
    assert doc["info"]["cartan_albert_pair"] == {"free_rank": 7, "torsion": []}
    assert doc["info"]["z3_albert_pair"] == {"free_rank": 1, "torsion": [3, 3, 3]}


def test_universal_deterministic(capsys):
    main(["universal", "--grading", "cd_bicayley_pair"])
    first = capsys.readouterr().out
    main(["universal", "--grading", "cd_bicayley_pair"])
    assert capsys.readouterr().out == first


def test_tkk_export(tmp_path, capsys):
    out = tmp_path / "e6.json"
    assert main(["tkk", "--grading", "cd_bicayley_pair", "--output", str(out)]) == EXIT_OK
    text = capsys.readouterr().out
    assert "type=(48, 1, 0, 7)" in text and "dim=78" in text
    assert json.loads(out.read_text())["dim"] == 78


def test_failure_exit_code(monkeypatch):
    from exjordan import gradings as grd
    bad = grd.AbelianGroup(0, (5,))
    monkeypatch.setitem(grd.EXPECTED_GROUPS, "cartan_bicayley_pair", bad)
    assert main(["universal", "--grading", "cartan_bicayley_pair"]) == EXIT_FAIL
