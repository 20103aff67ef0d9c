"""One test per acceptance criterion; the terminal summary lists each outcome."""

import subprocess
import sys
import time

import pytest

from gril import Outcome, classify_ideal, parse_predicate, theorem1_condition, vnr_suite
from gril.suite import load_catalog, load_expectations, run_all, select_fixtures
from gril.suite.fixtures import SWEEP_LIMIT


def _fixture(name):
    fx, = select_fixtures(name)
    return fx


def _product(R, verdict):
    p = R.ring.one
    for _, x in verdict.witness:
        p = int(R.ring.mul(p, x.index))
    return p


def _sweep(checks):
    start = time.perf_counter()
    report = run_all(load_catalog(), checks)
    elapsed = time.perf_counter() - start
    failures = [(r["check_id"], r["fixture"], f) for r in report["records"] for f in r["failures"]]
    for line in failures[:10]:
        print("unexpected:", line)
    return report, failures, elapsed


def _report(name, ok, detail=""):
    print(f"{name}: {'PASS' if ok else 'FAIL'} {detail}".rstrip())
    return ok


@pytest.mark.parametrize("name", ["ex2-z18i", "ex2-z12i"])
def test_zpq2_weakly_vs_plain_one_absorbing(name):
    start = time.perf_counter()
    fx = _fixture(name)
    R, I = fx.ring, fx.ideals["q2"]
    weak = classify_ideal(I, parse_predicate("weakly-1-absorbing"))
    plain = classify_ideal(I, parse_predicate("1-absorbing"))
    elapsed = time.perf_counter() - start
    ok = weak.outcome is Outcome.PASS and plain.outcome is Outcome.FAIL and _product(R, plain) == 0
    if name == "ex2-z18i":
        ok = ok and plain.witness_text() == {"a": "2", "b": "3", "c": "3"}
    assert _report(f"weakly vs plain 1-absorbing on {name}", ok and elapsed < 5, f"({elapsed:.2f}s, witness {plain})")


def test_boolean_omega_vacuous_and_weakly_fails():
    start = time.perf_counter()
    fx = _fixture("ex3-z2x4")
    I = fx.ideals["I"]
    omega = classify_ideal(I, parse_predicate("phi-1-absorbing", "omega"))
    weak = classify_ideal(I, parse_predicate("weakly-1-absorbing"))
    elapsed = time.perf_counter() - start
    ok = (
        omega.outcome is Outcome.VACUOUS
        and weak.outcome is Outcome.FAIL
        and weak.witness_text() == {"a": "(1, 1, 1, 0)", "b": "(1, 1, 0, 1)", "c": "(1, 0, 1, 1)"}
    )
    assert _report("omega vacuous, weakly fails on Z2^4", ok and elapsed < 1, f"({elapsed:.2f}s, witness {weak})")


def test_weakly_prime_witness():
    start = time.perf_counter()
    fx = _fixture("ex2-z18i")
    R, I = fx.ring, fx.ideals["q2"]
    v = classify_ideal(I, parse_predicate("weakly-prime"))
    elapsed = time.perf_counter() - start
    ok = v.outcome is Outcome.FAIL and v.witness_text() == {"a": "3", "b": "3"} and str(R.ring.format_index(_product(R, v))) == "9"
    assert _report("weakly-prime witness", ok and elapsed < 1, f"({elapsed:.2f}s, witness {v})")


def test_condition1_without_condition2():
    start = time.perf_counter()
    fx = _fixture("t1-z50x")
    I = fx.ideals["I"]
    c1 = theorem1_condition(1, I, "zero")
    c2 = theorem1_condition(2, I, "zero")
    elapsed = time.perf_counter() - start
    report = run_all([fx], ["T1-counterexample"])
    recorded = report["records"][0]
    exp, = load_expectations()["theorem1_counterexamples"]
    ok = (
        c1.outcome is Outcome.PASS
        and c2.outcome is Outcome.FAIL
        and c2.witness_text() == exp["witness"]
        and recorded["failures"] == []
        and any(e["witness"] == exp["witness"] for e in recorded["expected_counterexamples"])
    )
    assert _report("condition (1) without (2)", ok and elapsed < 30, f"({elapsed:.2f}s, (2) witness {c2})")


def test_implication_sweeps():
    checks = ["P1.1", "P1.2", "P1.3", "P1.4", "R1", "R1-Cor", "L1", "L1-Cor", "T1-chain", "T1g-equiv"]
    report, failures, elapsed = _sweep(checks)
    swept = {fx.name for fx in load_catalog() if fx.size <= SWEEP_LIMIT}
    covered = {r["fixture"] for r in report["records"] if r["check_id"] == "T1g-equiv" and r["instances"]}
    ok = not failures and swept <= covered and elapsed < 120
    assert _report("implication sweeps", ok, f"({elapsed:.1f}s, {report['summary']['instances']} instances)")


def test_triple_zero_sweep():
    report, failures, elapsed = _sweep(["T2", "T2a", "T2b"])
    ok = not failures and report["summary"]["passed"] > 0
    assert _report("triple-zero sweep", ok, f"({elapsed:.1f}s, {report['summary']['instances']} instances)")


def test_transfer_sweeps():
    report, failures, elapsed = _sweep(["T5i", "T5ii", "T5iii", "T6", "T7.1", "T7.2", "T7.3"])
    per_check = {}
    for r in report["records"]:
        per_check[r["check_id"]] = per_check.get(r["check_id"], 0) + r["instances"]
    ok = not failures and all(per_check[c] > 0 for c in ("T5i", "T5ii", "T5iii", "T6", "T7.1", "T7.2"))
    assert _report("transfer sweeps", ok, f"({elapsed:.1f}s, instances {per_check})")


def test_regular_ring_suite():
    start = time.perf_counter()
    report = run_all(load_catalog(), ["S3-def-examples", "S3-L1", "S3-L2", "S3-P3", "S3-L4", "S3-T5", "S3-P6", "S3-Cor"])
    elapsed = time.perf_counter() - start
    failures = [f for r in report["records"] for f in r["failures"]]
    expected = load_expectations()["vnr"]
    by_name = {fx.name: fx for fx in load_catalog()}
    vnr_ok = all(vnr_suite(by_name[name].ring).is_vnr == flag for name, flag in expected.items())
    ok = not failures and vnr_ok and elapsed < 30
    assert _report("regular ring suite", ok, f"({elapsed:.1f}s)")


def test_determinism():
    cmd = [sys.executable, "-m", "gril", "verify", "--format", "json"]
    first = subprocess.run(cmd, capture_output=True)
    second = subprocess.run(cmd, capture_output=True)
    ok = first.returncode == 0 and first.stdout == second.stdout and len(first.stdout) > 0
    assert _report("determinism", ok, f"({len(first.stdout)} bytes, exit {first.returncode})")
