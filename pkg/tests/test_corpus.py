#!/usr/bin/env python
# -*- coding: utf-8 -*-
"""Every bundled session script parses and runs cleanly"""

from pathlib import Path

import pytest

from regkit.script import RunFlags, parse_session, render, run_file

CORPUS = sorted((Path(__file__).parent.parent / "corpus").glob("*.rk"))


def test_corpus_is_present():
    assert len(CORPUS) >= 10


@pytest.mark.parametrize("path", CORPUS, ids=lambda p: p.name)
def test_corpus_parses(path):
    script = parse_session(path.read_text())
    assert script.commands()
    assert parse_session(render(script)) == script


@pytest.mark.parametrize("path", CORPUS, ids=lambda p: p.name)
def test_corpus_runs(path):
    doc = run_file(str(path), RunFlags(max_v=2, n_jobs=1))
    failed = [(r["statement"], r.get("error")) for r in doc.results if r["status"] != "ok"]
    assert not failed
    assert doc.exit_code == 0
