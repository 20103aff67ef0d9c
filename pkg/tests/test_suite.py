import json
from importlib.resources import files

import jsonschema
import pytest

from gril.errors import UnknownCheckError
from gril.suite import CHECK_IDS, REGISTRY, load_catalog, load_expectations, run_all, run_check, select_fixtures
from gril.suite.checks import get_check
from gril.errors import SpecParseError

CANONICAL = (
    "P1.1", "P1.2", "P1.3", "P1.4", "R1", "R1-Cor", "L1", "L1-Cor",
    "T1-chain", "T1-counterexample", "T1g-equiv", "T2", "T2a", "T2b", "T3", "T4",
    "T5i", "T5ii", "T5iii", "T6", "T7.1", "T7.2", "T7.3",
    "S3-def-examples", "S3-L1", "S3-L2", "S3-P3", "S3-L4", "S3-T5", "S3-P6", "S3-Cor",
)

SCHEMA = json.loads(files("gril.suite").joinpath("report.schema.json").read_text(encoding="utf-8"))


@pytest.fixture(scope="module")
def catalog():
    return load_catalog()


def _pick(catalog, *names):
    return [fx for fx in catalog if fx.name in names]


def test_registry_covers_every_result():
    missing = [c for c in CANONICAL if c not in CHECK_IDS]
    assert not missing
    assert list(CHECK_IDS[: len(CANONICAL)]) == list(CANONICAL)
    assert len(set(CHECK_IDS)) == len(CHECK_IDS)
    assert all(check.summary for check in REGISTRY)


def test_unknown_check():
    with pytest.raises(UnknownCheckError):
        get_check("T99")
    with pytest.raises(UnknownCheckError):
        run_all([], ["T99"])


def test_empty_run_is_ok():
    report = run_all([])
    assert report["records"] == [] and report["summary"]["ok"]
    assert report["summary"]["instances"] == 0
    jsonschema.validate(report, SCHEMA)


def test_fixture_selection(catalog):
    assert {fx.provenance for fx in select_fixtures("paper", catalog)} == {"PAPER"}
    assert [fx.name for fx in select_fixtures("z6,z4", catalog)] == ["z6", "z4"]
    with pytest.raises(SpecParseError):
        select_fixtures("z6,missing", catalog)


def test_recorded_expectations_are_locked():
    # a change to the recorded verdicts must show up here as well
    exp = load_expectations()
    summary = sorted(
        (e["check"], e["fixture"], e["predicate"], e.get("phi", ""), e["outcome"], json.dumps(e.get("witness", {}), sort_keys=True))
        for e in exp["verdicts"]
    )
    assert summary == sorted([
        ("EX2", "ex2-z18i", "1-absorbing", "", "FAIL", '{"a": "2", "b": "3", "c": "3"}'),
        ("EX2", "ex2-z18i", "weakly-1-absorbing", "", "PASS", "{}"),
        ("EX2", "ex2-z12i", "1-absorbing", "", "FAIL", "{}"),
        ("EX2", "ex2-z12i", "weakly-1-absorbing", "", "PASS", "{}"),
        ("EX3", "ex3-z2x4", "phi-1-absorbing", "omega", "VACUOUS", "{}"),
        ("EX3", "ex3-z2x4", "weakly-1-absorbing", "", "FAIL",
         '{"a": "(1, 1, 1, 0)", "b": "(1, 1, 0, 1)", "c": "(1, 0, 1, 1)"}'),
        ("EX4", "ex2-z18i", "weakly-prime", "", "FAIL", '{"a": "3", "b": "3"}'),
        ("EX4", "ex2-z12i", "weakly-prime", "", "FAIL", '{"a": "2", "b": "2"}'),
    ])
    t1, = exp["theorem1_counterexamples"]
    assert (t1["condition1"], t1["condition2"], t1["witness"]) == ("PASS", "FAIL", {"a": "2", "b": "5", "x": "5 + X"})
    assert exp["vnr"] == {"z6": True, "z4": False, "f9-c2": True, "z2": True, "z2x2": True,
                          "z2x2x2": True, "ex3-z2x4": True}


def test_t5i_on_example_two(catalog):
    record, = run_check("T5i", _pick(catalog, "ex2-z18i"))
    assert record["failures"] == [] and record["passed"] > 0


def test_s3_p6_on_z6(catalog):
    record, = run_check("S3-P6", _pick(catalog, "z6"))
    assert record["failures"] == [] and record["instances"] > 0


def test_t1_chain_records_expected_counterexample(catalog):
    record, = run_check("T1-chain", _pick(catalog, "t1-z50x"))
    assert record["failures"] == []
    assert {"instance": "I=I; phi=zero", "witness": {"a": "2", "b": "5", "x": "5 + X"},
            "reason": "(1) holds while (2) fails"} in record["expected_counterexamples"]


def test_records_are_consistent(catalog):
    fixtures = _pick(catalog, "z6", "z12", "z4e-c2", "ex3-z2x4")
    report = run_all(fixtures)
    jsonschema.validate(report, SCHEMA)
    assert report["summary"]["ok"]
    keys = [(CHECK_IDS.index(r["check_id"]), r["fixture"]) for r in report["records"]]
    assert keys == sorted(keys)
    for r in report["records"]:
        assert r["instances"] == r["passed"] + len(r["expected_counterexamples"]) + len(r["failures"])
        assert r["vacuous"] <= r["passed"]


def test_reports_are_deterministic(catalog):
    fixtures = _pick(catalog, "z12", "z2e3-b3")
    first = json.dumps(run_all(fixtures), sort_keys=True)
    second = json.dumps(run_all(fixtures), sort_keys=True)
    assert first == second
