#!/usr/bin/env python
# -*- coding: utf-8 -*-
import json
from types import SimpleNamespace

import pytest

import regkit.script.runner
from regkit.core.field import QQ, Fp
from regkit.script import (
    Command,
    IdealDecl,
    ModuleDecl,
    ResultDocument,
    RingDecl,
    RunFlags,
    corpus_table,
    parse_field,
    parse_polynomial,
    parse_session,
    render,
    run,
    summarize,
)
from regkit.util.exceptions import ParameterError, ScriptError

SCRIPT = """\
# two ideals and a module
ring R = QQ[x,y];
ideal I = (x^2, x*y);
module M = coker [[x, y]] twists (0);
module S = shift M by 2;
reg I;
betti M;
powers (x, y) max_v=3;
"""


def test_parse_session():
    script = parse_session(SCRIPT)
    assert len(script) == 7
    ring, ideal, module, shifted = script.statements[:4]
    assert isinstance(ring, RingDecl)
    assert ring.variables == ("x", "y")
    assert ring.field == QQ
    assert isinstance(ideal, IdealDecl)
    assert [str(f) for f in ideal.generators] == ["x^2", "x*y"]
    assert isinstance(module, ModuleDecl)
    assert module.kind == "coker"
    assert module.twists == ((0,),)
    assert shifted.amount == (2,)
    assert [c.name for c in script.commands()] == ["reg", "betti", "powers"]
    assert script.commands()[2].option("max_v") == 3
    assert script.commands()[0].line == 6
    assert set(script.rings()) == {"R"}


def test_parse_bigraded_ring():
    script = parse_session("ring A = Fp(7)[Y1,Y2] deg Y1 = (2,1) deg Y2 = (3,1);")
    (decl,) = script.statements
    assert decl.field == Fp(7)
    assert decl.ring().degrees == ((2, 1), (3, 1))


def test_parse_linear_powers_command():
    script = parse_session("ring R = QQ[x,y]; linear-powers (x, y) budget=2;")
    (c,) = script.commands()
    assert c.name == "linear-powers"
    assert c.options == (("budget", 2),)


def test_field_override():
    script = parse_session("ring R = QQ[x,y];", field_override=Fp(32003))
    assert script.statements[0].field == Fp(32003)


@pytest.mark.parametrize(
    "text, code, line, column",
    [
        ("ring R = QQ[x,y]; reg J;", "E_UNDECLARED", 1, 23),
        ("ring R = QQ[x,y];\nideal I = (x, z);", "E_UNDECLARED", 2, 15),
        ("reg (x);", "E_UNDECLARED", 1, 1),
        ("ring R = QQ[x]; ring R = QQ[y];", "E_REDECLARED", 1, 22),
        ("ring R = QQ[x,y]; ideal I = (x^2 + y);", "E_INHOMOGENEOUS", 1, 30),
        ("ring R = QQ[x,y]; frobnicate (x);", "E_COMMAND", 1, 19),
        ("ring R = QQ[x,y]; reg (x) max_v=3;", "E_OPTION", 1, 27),
        ("ring R = QQ[x,y]; module M = free (0); powers M;", "E_TYPE", 1, 47),
        ("ring R = QQ[x,y]; rho (x);", "E_ARITY", 1, 19),
        ("ring R = QQ[x,y] deg x = (1,0);", "E_ARITY", 1, 1),
        ("ring R = QQ[x,y] reg (x);", "E_SYNTAX", 1, 18),
        ("ring R = QQ[x,y]; reg (x @ y);", "E_SYNTAX", 1, 26),
        ("ring R = QQ[x,y]; reg (x/0);", "E_SYNTAX", 1, 26),
        ("ring R = QQ[x,y]; reg (x/y);", "E_SYNTAX", 1, 26),
        ("ring R = Fp(4)[x];", "E_SYNTAX", 1, 13),
    ],
)
def test_diagnostics(text, code, line, column):
    with pytest.raises(ScriptError) as info:
        parse_session(text)
    assert info.value.code == code
    assert (info.value.line, info.value.column) == (line, column)
    assert str(info.value).startswith(f"{code} at {line}:{column}")


def test_parse_polynomial(R2):
    assert str(parse_polynomial("(x + y)^2 - 2*x*y", R2)) == "x^2 + y^2"
    assert str(parse_polynomial("-3/2*x", R2)) == "-3/2*x"
    assert str(parse_polynomial("x**3", R2)) == "x^3"
    with pytest.raises(ScriptError):
        parse_polynomial("x +", R2)


def test_parse_field():
    assert parse_field("qq") == QQ
    assert parse_field("fp32003") == Fp(32003)
    assert parse_field("Fp(5)") == Fp(5)
    with pytest.raises(ParameterError):
        parse_field("GF8")


def test_render_round_trip():
    text = SCRIPT + (
        "ring A = QQ[Y1,Y2] deg Y1 = (2,1) deg Y2 = (3,1);\n"
        "module N = coker [[Y1*Y2, -3/2*Y1^3]] twists ((0,0));\n"
        "rho N v_max=3;\n"
    )
    script = parse_session(text)
    again = parse_session(render(script))
    assert again == script
    assert render(again) == render(script)


def test_run_verify():
    doc = run(parse_session("ring R = QQ[x,y]; verify (x^2, x*y);"))
    (entry,) = doc.results
    assert entry["status"] == "ok"
    assert entry["result"]["reg3"] == 2
    assert entry["result"]["agree"]
    assert doc.exit_code == 0
    assert "seconds" not in entry


def test_run_sample_script():
    doc = run(parse_session(SCRIPT))
    reg, betti, powers = doc.results
    assert reg["result"]["reg"] == 2
    assert betti["result"]["betti"]
    assert powers["result"]["sequence"] == [[1, 1], [2, 2], [3, 3]]
    assert powers["result"]["law"]["kind"] == "linear"
    assert doc.status == "ok"


def test_run_continues_after_error():
    doc = run(parse_session("ring R = QQ[x,y]; linear-powers (x^2, y^3); reg (x);"))
    failed, ok = doc.results
    assert failed["status"] == "error"
    assert failed["error"].startswith("ParameterError")
    assert ok["status"] == "ok"
    assert ok["result"]["reg"] == 1
    assert doc.exit_code == 1


def test_run_zero_module():
    doc = run(parse_session("ring R = QQ[x,y]; module Z = quotient (1); reg Z;"))
    (entry,) = doc.results
    assert entry["status"] == "ok"
    assert doc.to_dict()["results"][0]["result"]["reg"] == "-inf"
    assert "regularity of the zero module is -inf" in entry["warnings"]


def test_run_rho():
    text = (
        "ring A = QQ[Y1,Y2] deg Y1 = (2,1) deg Y2 = (3,1);\n"
        "module N = coker [[Y1*Y2]] twists ((0,0));\n"
        "rho N v_max=3;\n"
    )
    (entry,) = run(parse_session(text)).results
    assert entry["status"] == "ok"
    assert entry["result"]["rho"] == {"0": 0, "1": 3, "2": 6, "3": 9}
    assert entry["result"]["initial_invariance"]
    assert len(entry["result"]["filtration"]) == 2


def test_run_cross_check_failure(monkeypatch):
    fake = SimpleNamespace(reg1=99, ranks={}, euler_ok=True)
    monkeypatch.setattr(regkit.script.runner, "koszul_summary", lambda *args: fake)
    doc = run(parse_session("ring R = QQ[x,y]; verify (x, y);"))
    assert doc.results[0]["status"] == "cross-check-failed"
    assert doc.status == "cross-check-failed"
    assert doc.exit_code == 2


def test_run_flags_and_outputs():
    text = "ring R = Fp(32003)[x,y]; powers (x, y) max_v=9;"
    doc = run(parse_session(text), RunFlags(max_v=2, timing=True))
    (entry,) = doc.results
    assert entry["result"]["sequence"] == [[1, 1], [2, 2]]
    assert "seconds" in entry
    assert doc.to_csv() == 'statement,v,value\n"powers (x, y) max_v=9",1,1\n"powers (x, y) max_v=9",2,2\n'
    payload = json.loads(doc.to_json())
    assert payload["status"] == "ok"
    assert payload["provenance"]["fields"] == ["Fp(32003)"]
    assert payload["provenance"]["order"] == "degrevlex"


def test_summarize():
    doc = run(parse_session("ring R = QQ[x,y]; reg (x^2, x*y); linear-powers (x^2, y^3);"))
    text = summarize(doc)
    assert "[ok] line 1: reg (x^2, x*y)" in text
    assert "reg=2" in text
    assert "[error]" in text
    assert text.endswith("status: error\n")


def test_corpus_table():
    text = corpus_table([("a.rk", "ok", 0), ("b.rk", "error", 1)])
    assert text.splitlines()[0].startswith("file")
    assert text.endswith("1/2 passed\n")


def test_command_equality_ignores_position():
    a = parse_session("ring R = QQ[x,y]; reg (x);").commands()[0]
    b = parse_session("ring R = QQ[x,y];\n\nreg (x);").commands()[0]
    assert isinstance(a, Command)
    assert a == b
    assert a.line != b.line


def test_run_powers_vanishing_law():
    text = "ring R = QQ[x,y]; module Q = quotient (x); powers (x) module=Q max_v=4;"
    doc = run(parse_session(text))
    (entry,) = doc.results
    assert entry["statement"] == "powers (x) module=Q max_v=4"
    law = doc.to_dict()["results"][0]["result"]["law"]
    assert law["kind"] == "vanishing"
    assert law["value"] == "-inf"
    assert doc.to_csv().splitlines()[1] == '"powers (x) module=Q max_v=4",1,-inf'


def test_run_records_unexpected_failure(monkeypatch):
    def broken(*args):
        raise RuntimeError("boom")

    monkeypatch.setattr(regkit.script.runner, "koszul_summary", broken)
    doc = run(parse_session("ring R = QQ[x,y]; verify (x, y); reg (x);"))
    failed, ok = doc.results
    assert failed["status"] == "error"
    assert failed["error"] == "RuntimeError: boom"
    assert ok["result"]["reg"] == 1
    assert doc.exit_code == 1


def test_csv_quotes_statements():
    doc = ResultDocument(rows=[('say "hi", twice', 1, 3)])
    assert doc.to_csv() == 'statement,v,value\n"say ""hi"", twice",1,3\n'
