import os
from pathlib import Path

import pytest

import pslens

DATA = Path(os.environ.get("PSLENS_DATA_DIR", Path(__file__).resolve().parents[2] / "data"))
TODAY = "2025-04-01"


def read(*parts):
    return (DATA.joinpath(*parts)).read_text()


def test_p1_is_duplicable():
    text = read("fixtures", "p1.iposet")
    assert pslens.verify_iposet(text) == []
    assert pslens.check_duplicable(text) == []


def test_bad_table_reports_axiom():
    bad = "elements x y\nreflexive\nid x y\n"
    axioms = [a for a, _ in pslens.verify_iposet(bad)]
    assert "id-subset-le" in axioms


def test_violation_spaces():
    for g in ("G1", "G2", "G3"):
        verdicts = pslens.check_conditions(read("fixtures", f"{g.lower()}_violation.space"))
        assert [k for k, v in verdicts.items() if v] == [g]


def test_plain_put_matches_golden():
    s = read("scenario", "s_tl.json")
    out = pslens.put_plain(s, read("scenario", "w_og.json"), read("scenario", "w_dt.json"), TODAY)
    assert out == read("scenario", "s_tl_2.json")


def test_conflicting_put_raises():
    s = read("scenario", "s_tl.json")
    og = '{"upsert": [{"id": "009", "done": false, "name": "x", "due": "2025-04-01"}], "complete": [], "postpone": [], "delete": []}'
    dt = '{"upsert": [], "complete": [], "postpone": [], "delete": ["009"]}'
    with pytest.raises(pslens.Error, match="MergeConflict"):
        pslens.put_plain(s, og, dt, TODAY)


def test_session_script():
    sess = pslens.Session(TODAY, base_dir=str(DATA / "scenario"))
    for line in read("scenario", "scenario.sync").splitlines():
        if line.strip() and not line.lstrip().startswith("#"):
            status, _ = sess.run(line)
            assert status == 0, line
    assert sess.source() == read("scenario", "expected_final.json")


def test_law_suites_pass():
    ok, text = pslens.run_laws()
    assert ok, text
    assert pslens.fixture_suite_names()
