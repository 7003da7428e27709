#!/usr/bin/env python
# -*- coding: utf-8 -*-
import json

import pytest

from regkit.cli import build_parser, main

GOOD = "ring R = QQ[x,y];\nideal I = (x^2, x*y);\nreg I;\npowers I max_v=2;\n"


@pytest.fixture
def script(tmp_path):
    path = tmp_path / "good.rk"
    path.write_text(GOOD)
    return path


def test_run(script, capsys):
    assert main(["run", str(script)]) == 0
    out = capsys.readouterr().out
    assert "reg=2" in out
    assert out.endswith("status: ok\n")


def test_run_writes_reports(script, tmp_path):
    json_out = tmp_path / "out" / "report.json"
    csv_out = tmp_path / "rows.csv"
    assert main(["run", str(script), "--json", str(json_out), "--csv", str(csv_out), "--timing"]) == 0
    payload = json.loads(json_out.read_text())
    assert payload["status"] == "ok"
    assert [r["command"] for r in payload["results"]] == ["reg", "powers"]
    assert "seconds" in payload["results"][0]
    rows = csv_out.read_text().splitlines()
    assert rows == ["statement,v,value", '"powers I max_v=2",1,2', '"powers I max_v=2",2,4']


def test_run_field_override(script, tmp_path):
    json_out = tmp_path / "report.json"
    assert main(["run", str(script), "--field", "fp32003", "--json", str(json_out)]) == 0
    assert json.loads(json_out.read_text())["provenance"]["fields"] == ["Fp(32003)"]


def test_run_max_v_override(script, tmp_path):
    json_out = tmp_path / "report.json"
    assert main(["run", str(script), "--max-v", "3", "--json", str(json_out)]) == 0
    powers = json.loads(json_out.read_text())["results"][1]
    assert powers["result"]["sequence"] == [[1, 2], [2, 4], [3, 6]]


def test_run_missing_file(tmp_path):
    assert main(["run", str(tmp_path / "absent.rk")]) == 1


def test_run_parse_error(tmp_path, capsys):
    path = tmp_path / "bad.rk"
    path.write_text("ring R = QQ[x,y];\nreg J;\n")
    assert main(["run", str(path)]) == 1
    err = capsys.readouterr().err
    assert "E_UNDECLARED at 2:5" in err


def test_run_engine_error(tmp_path, capsys):
    path = tmp_path / "error.rk"
    path.write_text("ring R = QQ[x,y];\nlinear-powers (x^2, y^3);\n")
    assert main(["run", str(path)]) == 1
    assert capsys.readouterr().out.endswith("status: error\n")


def test_corpus(tmp_path, capsys):
    (tmp_path / "a.rk").write_text(GOOD)
    (tmp_path / "b.rk").write_text("ring R = QQ[x,y,z];\nverify (x, y, z);\n")
    json_dir = tmp_path / "json"
    assert main(["corpus", str(tmp_path), "--json", str(json_dir), "--n-jobs", "1"]) == 0
    out = capsys.readouterr().out
    assert "a.rk" in out
    assert out.endswith("2/2 passed\n")
    assert sorted(p.name for p in json_dir.iterdir()) == ["a.json", "b.json"]


def test_corpus_mixed(tmp_path, capsys):
    (tmp_path / "a.rk").write_text(GOOD)
    (tmp_path / "b.rk").write_text("ring R = QQ[x,y];\nreg J;\n")
    assert main(["corpus", str(tmp_path), "--n-jobs", "1"]) == 1
    assert capsys.readouterr().out.endswith("1/2 passed\n")


def test_corpus_empty(tmp_path):
    assert main(["corpus", str(tmp_path)]) == 1


def test_corpus_not_a_directory(script):
    assert main(["corpus", str(script)]) == 1


def test_version(capsys):
    with pytest.raises(SystemExit) as info:
        main(["--version"])
    assert info.value.code == 0
    assert capsys.readouterr().out.startswith("regkit ")


def test_bad_field():
    with pytest.raises(SystemExit):
        build_parser().parse_args(["run", "x.rk", "--field", "GF8"])
