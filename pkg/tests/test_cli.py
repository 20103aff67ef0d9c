import json
import subprocess
import sys

import pytest

from gril.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_classify_fail_exits_one(capsys):
    code, out, _ = run(capsys, "classify", "ex2-z18i", "--ideal", "q2", "--predicate", "1-absorbing", "--format", "json")
    assert code == 1
    payload = json.loads(out)
    assert payload["outcome"] == "FAIL"
    assert payload["witness"] == {"a": "2", "b": "3", "c": "3"}


def test_classify_pass_exits_zero(capsys):
    code, out, _ = run(capsys, "classify", "ex2-z18i", "--ideal", "q2", "--predicate", "weakly-1-absorbing")
    assert code == 0
    assert "PASS" in out


def test_classify_component_predicate(capsys):
    code, out, _ = run(capsys, "classify", "ex2-z18i", "--ideal", "q2", "--predicate", "g-phi-1-absorbing",
                       "--phi", "zero", "--degree", "1", "--format", "json")
    assert json.loads(out)["predicate"] == "g-phi-1-absorbing phi=zero g=1"
    assert code in (0, 1)


@pytest.mark.parametrize(
    "argv",
    [
        ("classify", "ex2-z18i", "--ideal", "nope", "--predicate", "prime"),
        ("classify", "ex2-z18i", "--ideal", "q2", "--predicate", "sorta-prime"),
        ("classify", "ex2-z18i", "--ideal", "q2", "--predicate", "phi-prime", "--phi", "cube"),
        ("classify", "ex2-z18i", "--ideal", "q2", "--predicate", "g-phi-prime", "--degree", "5"),
        ("validate", "no-such-fixture"),
        ("verify", "--check", "NOPE"),
        ("verify", "--fixtures", "nothing-here"),
        ("frobnicate",),
    ],
)
def test_input_errors_exit_two(capsys, argv):
    code, _, _ = run(capsys, *argv)
    assert code == 2


def test_parse_error_reports_position(capsys, tmp_path):
    path = tmp_path / "bad.json"
    path.write_text('{"name": "x",\n "ring": }')
    code, _, err = run(capsys, "validate", str(path))
    assert code == 2
    assert "PARSE_ERROR" in err and "line 2" in err


def test_invalid_grading_prints_witness(capsys, tmp_path):
    path = tmp_path / "bad.json"
    path.write_text(json.dumps({
        "name": "bad",
        "ring": {"quotient_poly": {"base": {"zmod": 3}, "modulus": [1, 0, 1], "var": "i"}},
        "grading": {"group": "cyclic:3", "degrees": {"i": 1}},
    }))
    code, _, err = run(capsys, "classify", str(path), "--ideal", "x", "--predicate", "prime")
    assert code == 2
    assert "VALIDATION_ERROR" in err and "witness: a=i, b=i" in err


def test_size_limit_from_environment(capsys, monkeypatch):
    monkeypatch.setenv("GRIL_MAX_RING_SIZE", "100")
    code, _, err = run(capsys, "ideals", "ex2-z18i")
    assert code == 2
    assert "SIZE_EXCEEDED" in err


def test_validate_and_ideals(capsys):
    code, out, _ = run(capsys, "validate", "z4e-c2", "--format", "json")
    assert code == 0
    assert json.loads(out)["valid"] is True
    code, out, _ = run(capsys, "ideals", "z12", "--format", "json")
    payload = json.loads(out)
    assert code == 0 and payload["count"] == 6 and payload["maximal"] == 2
    assert [e["generators"] for e in payload["ideals"]][0] == ["0"]


def test_triples(capsys):
    code, out, _ = run(capsys, "triples", "z18", "--ideal", "nine", "--format", "json")
    assert code == 0
    payload = json.loads(out)
    assert ["2", "3", "3"] in payload["triples"]


def test_triples_need_predicate(capsys):
    code, _, err = run(capsys, "triples", "ex2-z12i", "--ideal", "q2", "--phi", "empty")
    assert code == 1 and "not" in err


def test_verify_subset_json(capsys):
    code, out, _ = run(capsys, "verify", "--check", "EX2,EX4", "--fixtures", "paper", "--format", "json")
    assert code == 0
    report = json.loads(out)
    assert report["format"] == "gril-report/1"
    assert {r["check_id"] for r in report["records"]} == {"EX2", "EX4"}
    assert report["summary"]["failures"] == 0


def test_fixture_listing(capsys):
    code, out, _ = run(capsys, "fixtures", "--format", "json")
    names = [f["name"] for f in json.loads(out)["fixtures"]]
    assert code == 0 and "t1-z50x" in names and names == sorted(names)
    code, out, _ = run(capsys, "fixtures", "--show", "z12")
    assert code == 0 and json.loads(out)["name"] == "z12"


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "gril", "--version"], capture_output=True, text=True)
    assert proc.returncode == 0 and proc.stdout.startswith("gril ")
