import io
import json
import subprocess
import sys

import pytest

from dyckperm import DyckPath, parse_perm
from dyckperm import errors
from dyckperm.cli import render_chords, run
from dyckperm.verify import FAIL, PASS, RunReport, run_suite, SUITES


def call(*argv):
    out = io.StringIO()
    code = run(list(argv), out)
    return code, out.getvalue()


def records(text):
    return [json.loads(line) for line in text.splitlines()]


def test_map():
    code, text = call("map", "--sigma", "1,4,2,8,5,7,6,3", "--path", "uuddudud")
    assert code == 0
    (rec,) = records(text)
    assert rec["results"]["word"] == "uduuuddd"
    assert rec["status"] == "Pass"


def test_sequence():
    code, text = call("sequence", "--max-n", "6")
    assert code == 0
    found = json.dumps(records(text))
    for value in ("1", "3", "154", "8369", "711226", "90349957"):
        assert f'"{value}"' in found


def test_ints_are_strings():
    _, text = call("ccp", "count", "--n", "6")
    (rec,) = records(text)
    assert "12288" in json.dumps(rec["results"])
    assert not any(isinstance(v, int) for v in rec["results"].values())


def test_verify_all_n3():
    code, text = call("verify", "--all", "--n", "3")
    recs = records(text)
    assert code == 0
    assert recs and all(r["status"] == "Pass" for r in recs)
    names = {r["command"].split(":")[1].split(".")[0] for r in recs}
    assert names == set(SUITES)


@pytest.mark.parametrize("n", [1, 2, 3])
def test_verify_matches_library(n):
    for name in SUITES:
        assert all(r.status == PASS for r in run_suite(name, n))


@pytest.mark.parametrize(
    "argv",
    [
        ("invert", "--sigma", "162354", "--path", "uududd"),
        ("tunnel", "--path", "uuduuddd"),
        ("rep", "--sigma", "362154", "--path", "uududd"),
        ("ccp", "check", "--perm", "213645"),
        ("ccp", "enumerate", "--n", "2"),
        ("classes", "--n", "3", "--report", "sizes"),
        ("generators", "--p", "uuuddd", "--q", "ududud", "--count-only"),
        ("identity", "--n", "5"),
        ("dihedral", "--n", "4", "--list"),
        ("dihedral", "--n", "3", "--verify-theorem5"),
        ("orbit", "--path", "uuuddd"),
        ("stats", "--n", "3", "--table", "umax"),
        ("stats", "--n", "3", "--check", "equidistribution"),
        ("render", "--path", "uuduuddd"),
    ],
)
def test_subcommands_pass_and_replay(argv):
    code, first = call(*argv)
    assert code == 0, first
    assert all(r["status"] == "Pass" for r in records(first))
    assert call(*argv)[1] == first


def test_specific_results():
    _, text = call("invert", "--sigma", "162354", "--path", "uududd")
    assert records(text)[0]["results"]["word"] == "ududud"
    _, text = call("tunnel", "--path", "uuduuddd")
    assert "8,3,2,7,6,5,4,1" in text
    _, text = call("rep", "--sigma", "362154", "--path", "uududd")
    rec = records(text)[0]
    assert rec["results"]["pairing"] == "5,6,4,3,1,2"


def test_ccp_check_false_is_not_an_error():
    code, text = call("ccp", "check", "--perm", "236145")
    assert code == 0
    assert "false" in text.lower()


def test_domain_error_is_error_record():
    code, text = call("map", "--sigma", "2,1", "--path", "ududud")
    assert code == 1
    (rec,) = records(text)
    assert rec["status"] == "Error" and "SizeMismatch" in rec["results"]["error"]
    code, text = call("tunnel", "--path", "duud")
    assert code == 1 and "PrefixViolation" in text


def test_usage_error_exits_2():
    with pytest.raises(SystemExit) as exc:
        call("map", "--sigma", "21")
    assert exc.value.code == 2
    with pytest.raises(SystemExit) as exc:
        call("nonsense")
    assert exc.value.code == 2


def test_text_format():
    code, text = call("stats", "--n", "3", "--table", "umax", "--format", "text")
    assert code == 0
    lines = text.splitlines()
    assert any(line.split()[:2] == ["uuuddd", "3"] for line in lines)


def test_jobs_and_sorted_are_deterministic():
    a = call("verify", "--suite", "dyck", "--suite", "stats", "--n", "3")[1]
    b = call("verify", "--suite", "dyck", "--suite", "stats", "--n", "3", "--jobs", "2")[1]
    assert a == b
    c = call("verify", "--suite", "stats", "--suite", "dyck", "--n", "3", "--sorted")[1]
    assert [r["command"] for r in records(c)] == sorted(r["command"] for r in records(c))


def test_fail_requires_witness():
    with pytest.raises(ValueError):
        RunReport("x", {}, {}, FAIL)
    assert RunReport("x", {}, {}, FAIL, [{"w": 1}]).to_json()


def test_render_examples():
    assert "chords  (1,8) (2,3) (4,7) (5,6)" in render_chords(DyckPath("uuduuddd"))
    assert "chords  (1,2)" in render_chords(DyckPath("ud"))
    assert "chords  (3,4) (6,2) (1,5)" in render_chords(DyckPath("uududd"), parse_perm("362154"))
    with pytest.raises(errors.TooLarge):
        render_chords(DyckPath("ud" * 27))


def test_module_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "dyckperm", "sequence", "--max-n", "3"], capture_output=True, text=True
    )
    assert proc.returncode == 0 and '"154"' in proc.stdout
