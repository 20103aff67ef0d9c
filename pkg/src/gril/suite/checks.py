"""Executable checks, one per result, run over the fixture catalog.

Each check walks the instances of a fixture, filters them by the result's
premise and evaluates its conclusion. Results are collected in a
:class:`Tally`, which becomes one report record per (check, fixture).
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field

import numpy as np

from ..classify import (
    G_PHI_ONE_ABSORBING,
    G_PHI_PRIME,
    ONE_ABSORBING,
    PHI_ONE_ABSORBING,
    PHI_PRIME,
    PROOF,
    LITERAL,
    WEAKLY_ONE_ABSORBING,
    Predicate,
    classify_ideal,
    find_triple_zeros,
    theorem1_condition,
)
from ..errors import GrilError, UnknownCheckError
from ..ideals import (
    check_localization,
    enumerate_graded_ideals,
    graded_spectrum_tools,
    ideal_intersection,
    ideal_power,
    ideal_product,
    ideal_sum,
    localize,
    multiplicative_sets,
    principal_ideal,
    product_construction,
    product_ideal,
    quotient_construction,
    subring_ideals,
    subring_maximal_ideals,
    unit_ideal,
    zero_ideal,
)
from ..phi import (
    PHI_2,
    PHI_EMPTY,
    PHI_IDENTITY,
    PHI_OMEGA,
    PHI_ZERO,
    apply_phi,
    ideal_powers,
    induced_quotient,
    phi_contains,
    phi_power,
)
from ..regular import principal_to_idempotent, vnr_decomposition, vnr_suite
from ..rings import RingElement
from .fixtures import load_expectations

# the φ family the sweeps quantify over
PHI_FAMILY = (PHI_EMPTY, PHI_ZERO, PHI_2, phi_power(3), PHI_OMEGA)

# size bounds for the heavier sweeps
LOCALIZATION_LIMIT = 64
PRODUCT_LIMIT = 36
BOOLEAN_GRADING_LIMIT = 8

REPORT_FORMAT = "gril-report/1"


# ---------------------------------------------------------------------------
# tallies


@dataclass
class Tally:
    check_id: str
    fixture: str
    instances: int = 0
    passed: int = 0
    vacuous: int = 0
    premise_rejected: int = 0
    expected_counterexamples: list = field(default_factory=list)
    failures: list = field(default_factory=list)
    notes: dict = field(default_factory=dict)

    def reject(self, n=1):
        self.premise_rejected += n

    def ok(self, vacuous=False):
        self.instances += 1
        self.passed += 1
        if vacuous:
            self.vacuous += 1

    def fail(self, instance, witness):
        self.instances += 1
        self.failures.append({"instance": instance, "witness": _jsonable(witness)})

    def expected(self, instance, witness, reason):
        self.instances += 1
        self.expected_counterexamples.append(
            {"instance": instance, "witness": _jsonable(witness), "reason": reason}
        )

    def assert_(self, cond, instance, witness=None, vacuous=False):
        if cond:
            self.ok(vacuous)
        else:
            self.fail(instance, witness if witness is not None else {})

    def count(self, key, n=1):
        self.notes[key] = self.notes.get(key, 0) + n

    def record(self):
        out = {
            "check_id": self.check_id,
            "fixture": self.fixture,
            "instances": self.instances,
            "passed": self.passed,
            "vacuous": self.vacuous,
            "premise_rejected": self.premise_rejected,
            "expected_counterexamples": self.expected_counterexamples,
            "failures": self.failures,
        }
        if self.notes:
            out["notes"] = dict(sorted(self.notes.items()))
        return out


def _jsonable(w):
    if isinstance(w, dict):
        return {str(k): _jsonable(v) for k, v in w.items()}
    if isinstance(w, (list, tuple)):
        return [_jsonable(v) for v in w]
    if isinstance(w, (str, int, float, bool)) or w is None:
        return w
    return str(w)


# ---------------------------------------------------------------------------
# shared helpers


def _ideals(fx):
    return fx.sweep_ideals()


def _proper(fx):
    return [I for I in _ideals(fx) if I.is_proper()]


def _phis(fx):
    if fx.sweepable:
        return PHI_FAMILY
    return tuple(fx.phis) or (PHI_ZERO,)


def _label(fx, I):
    return fx.ideal_label(I)


def _inst(fx, I, phi=None, g=None, **extra):
    parts = [f"I={_label(fx, I)}"]
    if phi is not None:
        parts.append(f"phi={phi}")
    if g is not None:
        parts.append(f"g={g}")
    parts += [f"{k}={v}" for k, v in extra.items()]
    return "; ".join(parts)


def _witness(verdict):
    return {role: str(v) for role, v in verdict.witness}


class _Memo:
    """Per-fixture cache of φ values and verdicts shared across checks."""

    def __init__(self):
        self.phi = {}
        self.verdict = {}

    def value(self, phi, I):
        key = (phi, I.key)
        if key not in self.phi:
            self.phi[key] = apply_phi(phi, I)
        return self.phi[key]

    def classify(self, I, kind, phi=None, g=None):
        pred = Predicate(kind, phi, g)
        key = (pred, I.key)
        if key not in self.verdict:
            eff = pred.effective_phi
            self.verdict[key] = classify_ideal(I, pred, phi_value=self.value(eff, I))
        return self.verdict[key]

    def phi1(self, I, phi):
        return self.classify(I, PHI_ONE_ABSORBING, phi)


def _memo(fx):
    cache = fx.ring._cache
    if "suite_memo" not in cache:
        cache["suite_memo"] = _Memo()
    return cache["suite_memo"]


def _local_max(R):
    info = graded_spectrum_tools(R)
    return info.unique_maximal if info.is_graded_local else None


def _power_exponent_bound(I):
    return max(3, len(ideal_powers(I)) + 1)


def _proper_components(R, I):
    return [g for g in R.degrees if not I.mask[R.component_mask(g)].all()]


# ---------------------------------------------------------------------------
# predicate hierarchy and the graded-local results


# family members ordered so that each map is pointwise below the next
_ORDERED = (PHI_EMPTY, PHI_ZERO, PHI_OMEGA, phi_power(3), PHI_2, PHI_IDENTITY)


def check_p1_1(fx, t):
    """Passing under φ implies passing under any ψ with φ(I) ⊆ ψ(I)."""
    memo = _memo(fx)
    for I in _proper(fx):
        for phi, psi in itertools.permutations(_ORDERED, 2):
            if not phi_contains(memo.value(psi, I), memo.value(phi, I)):
                t.reject()
                continue
            v = memo.phi1(I, phi)
            if not v.passed:
                t.reject()
                continue
            w = memo.phi1(I, psi)
            t.assert_(w.passed, _inst(fx, I, f"{phi}<={psi}"), _witness(w), vacuous=w.vacuous)


def _hierarchy(fx, I):
    memo = _memo(fx)
    top = _power_exponent_bound(I)
    chain = [("1-absorbing", memo.classify(I, ONE_ABSORBING)),
             ("weakly", memo.classify(I, WEAKLY_ONE_ABSORBING)),
             ("omega", memo.phi1(I, PHI_OMEGA))]
    chain += [(f"power:{n}", memo.phi1(I, phi_power(n))) for n in range(top, 1, -1)]
    return chain


def check_p1_2(fx, t):
    """1-absorbing ⇒ weakly ⇒ ω ⇒ φ_{n+1} ⇒ φ_n ⇒ φ_2."""
    for I in _proper(fx):
        chain = _hierarchy(fx, I)
        broken = next(
            (k for k in range(1, len(chain)) if chain[k - 1][1].passed and not chain[k][1].passed), None
        )
        if broken is None:
            t.ok()
        else:
            name, v = chain[broken]
            t.fail(_inst(fx, I), {"holds": chain[broken - 1][0], "fails": name, **_witness(v)})


def check_p1_3(fx, t):
    """All φ_n up to the stabilisation index pass iff φ_ω passes."""
    memo = _memo(fx)
    for I in _proper(fx):
        top = _power_exponent_bound(I)
        all_n = all(memo.phi1(I, phi_power(n)).passed for n in range(2, top + 1))
        omega = memo.phi1(I, PHI_OMEGA).passed
        t.assert_(all_n == omega, _inst(fx, I), {"all_n": all_n, "omega": omega})


def check_p1_4(fx, t):
    """φ-prime ⇒ φ-1-absorbing prime."""
    memo = _memo(fx)
    for I in _proper(fx):
        for phi in _phis(fx):
            if not memo.classify(I, PHI_PRIME, phi).passed:
                t.reject()
                continue
            v = memo.phi1(I, phi)
            t.assert_(v.passed, _inst(fx, I, phi), _witness(v), vacuous=v.vacuous)


def check_r1(fx, t):
    """Graded local with m² ⊆ I ⇒ I is 1-absorbing prime."""
    m = _local_max(fx.ring)
    proper = _proper(fx)
    if m is None:
        t.reject(len(proper))
        return
    m2 = ideal_product(m, m)
    for I in proper:
        if not m2 <= I:
            t.reject()
            continue
        v = _memo(fx).classify(I, ONE_ABSORBING)
        t.assert_(v.passed, _inst(fx, I), _witness(v), vacuous=v.vacuous)


def check_r1_cor(fx, t):
    """m² is a proper 1-absorbing prime ideal of a graded local ring."""
    m = _local_max(fx.ring)
    if m is None:
        t.reject()
        return
    m2 = ideal_product(m, m)
    if not m2.is_proper():
        t.fail(_inst(fx, m2), {"m^2": "improper"})
        return
    v = _memo(fx).classify(m2, ONE_ABSORBING)
    t.assert_(v.passed, _inst(fx, m2), _witness(v), vacuous=v.vacuous)


def check_l1(fx, t):
    """Graded local with m³ ⊆ φ(I) ⇒ I is φ-1-absorbing prime."""
    m = _local_max(fx.ring)
    proper = _proper(fx)
    phis = _phis(fx)
    if m is None:
        t.reject(len(proper) * len(phis))
        return
    m3 = ideal_power(m, 3)
    memo = _memo(fx)
    for I in proper:
        for phi in phis:
            if not phi_contains(memo.value(phi, I), m3):
                t.reject()
                continue
            v = memo.phi1(I, phi)
            t.assert_(v.passed, _inst(fx, I, phi), _witness(v), vacuous=v.vacuous)


def check_l1_cor(fx, t):
    """Graded local with m³ = 0 ⇒ every proper I is φ-1-absorbing for nonempty φ."""
    m = _local_max(fx.ring)
    proper = _proper(fx)
    phis = [p for p in _phis(fx) if p != PHI_EMPTY]
    if m is None or not ideal_power(m, 3).is_zero():
        t.reject(len(proper) * len(phis))
        return
    memo = _memo(fx)
    for I in proper:
        for phi in phis:
            v = memo.phi1(I, phi)
            t.assert_(v.passed, _inst(fx, I, phi), _witness(v), vacuous=v.vacuous)


# ---------------------------------------------------------------------------
# six-condition characterisation and its component form


def _t1_results(fx, I, phi, g=None, reading=LITERAL):
    memo = _memo(fx)
    key = ("t1", phi, I.key, g, reading)
    if key not in memo.verdict:
        value = memo.value(phi, I)
        memo.verdict[key] = [
            theorem1_condition(k, I, phi, g, phi_value=value, reading=reading) for k in range(1, 7)
        ]
    return memo.verdict[key]


def _t1_expected(fx):
    return [e for e in load_expectations()["theorem1_counterexamples"] if e["fixture"] == fx.name]


def check_t1_chain(fx, t):
    """(6) ⇒ (5) ⇒ (4) ⇒ (3) ⇒ (2) ⇒ (1)."""
    expected = {(e["ideal"], e["phi"]): e for e in _t1_expected(fx)}
    for I in _proper(fx):
        for phi in _phis(fx):
            res = _t1_results(fx, I, phi)
            passed = [r.passed for r in res]
            broken = [k + 1 for k in range(1, 6) if passed[k] and not passed[k - 1]]
            inst = _inst(fx, I, phi)
            if broken:
                k = broken[0]
                t.fail(inst, {"holds": f"({k})", "fails": f"({k - 1})", **_witness(res[k - 2])})
                continue
            if passed[0] and not passed[1]:
                t.count("converse_1_to_2_fails")
                e = expected.get((_label(fx, I), str(phi)))
                if e is not None:
                    t.expected(inst, _witness(res[1]), "(1) holds while (2) fails")
                    continue
            t.ok()


def check_t1_counterexample(fx, t):
    """The recorded instance satisfies (1) but not (2), with the recorded witness."""
    for e in _t1_expected(fx):
        I = fx.ideals[e["ideal"]]
        phi = next(p for p in PHI_FAMILY + tuple(fx.phis) if str(p) == e["phi"])
        inst = _inst(fx, I, phi)
        c1, c2 = _t1_results(fx, I, phi)[:2]
        want = {k: str(fx.ring.element(v)) for k, v in e["witness"].items()}
        got = _witness(c2)
        if c1.outcome.name == e["condition1"] and c2.outcome.name == e["condition2"] and got == want:
            t.expected(inst, got, "(1) holds while (2) fails")
        else:
            t.fail(inst, {"condition1": c1.outcome.name, "condition2": c2.outcome.name, **got})


def check_t1g_equiv(fx, t):
    """The six component conditions agree for every realised degree."""
    for I in _proper(fx) if fx.sweepable else []:
        for phi in _phis(fx):
            for g in _proper_components(fx.ring, I):
                inst = _inst(fx, I, phi, g)
                proof = [r.passed for r in _t1_results(fx, I, phi, g, PROOF)]
                if len(set(proof)) > 1:
                    t.fail(inst, {"reading": PROOF, "conditions": proof})
                    continue
                literal = [r.passed for r in _t1_results(fx, I, phi, g, LITERAL)]
                if len(set(literal)) > 1:
                    t.expected(
                        inst,
                        {"reading": LITERAL, "conditions": literal},
                        "literal quantifier ranges break the equivalence; the proof reading agrees",
                    )
                else:
                    t.ok()


# ---------------------------------------------------------------------------
# triple zeros


def _products(ring, *sets):
    """All products x1*...*xk with xi drawn from the given index arrays, deduplicated."""
    out = np.asarray(sets[0], dtype=np.int64)
    for s in sets[1:]:
        out = np.unique(ring.mul(out[:, None], np.asarray(s, dtype=np.int64)[None, :]))
    return out


def _triple_zero_instances(fx):
    """(I, φ, g, φ(I), triple zeros) for every passing g-φ-1-absorbing instance with triple zeros."""
    memo = _memo(fx)
    key = ("triple_zero_instances",)
    if key in memo.verdict:
        return memo.verdict[key]
    out = []
    rejected = 0
    for I in _proper(fx):
        for phi in _phis(fx):
            value = memo.value(phi, I)
            for g in _proper_components(fx.ring, I):
                if value is None or not memo.classify(I, G_PHI_ONE_ABSORBING, phi, g).passed:
                    rejected += 1
                    continue
                zeros = find_triple_zeros(I, g, phi, phi_value=value)
                if not zeros:
                    rejected += 1
                    continue
                out.append((I, phi, g, value, zeros))
    memo.verdict[key] = (out, rejected)
    return out, rejected


def _triple_arrays(zeros):
    return [np.array([z.as_tuple()[k].index for z in zeros], dtype=np.int64) for k in range(3)]


def _first_escape(ring, inPhi, left, right):
    """First (row, element) with left[row] * right[j] outside φ(I), or None."""
    if right.size == 0:
        return None
    prod = ring.mul(left[:, None], right[None, :])
    bad = np.argwhere(~inPhi[prod])
    if bad.size == 0:
        return None
    i, j = bad[0]
    return int(i), int(right[j])


def _strong(ring, inI, zeros):
    a, b, c = _triple_arrays(zeros)
    keep = ~inI[ring.mul(a, c)] & ~inI[ring.mul(b, c)]
    return a[keep], b[keep], c[keep]


def check_t2(fx, t):
    """ab·I_g ⊆ φ(I) for every g-φ-1-triple zero (a, b, c)."""
    instances, rejected = _triple_zero_instances(fx)
    t.reject(rejected)
    ring = fx.ring.ring
    for I, phi, g, value, zeros in instances:
        a, b, _ = _triple_arrays(zeros)
        Ig = np.flatnonzero(I.component_mask(g))
        hit = _first_escape(ring, value.mask, ring.mul(a, b), Ig)
        t.count("triple_zeros", len(zeros))
        if hit is None:
            t.ok()
        else:
            z = zeros[hit[0]]
            t.fail(_inst(fx, I, phi, g), {"a": z.a, "b": z.b, "c": z.c, "x": ring.format_index(hit[1])})


def check_t2a(fx, t):
    """With ac, bc ∉ I: acI_g, bcI_g, aI_g², bI_g², cI_g² ⊆ φ(I)."""
    instances, rejected = _triple_zero_instances(fx)
    t.reject(rejected)
    ring = fx.ring.ring
    for I, phi, g, value, zeros in instances:
        a, b, c = _strong(ring, I.mask, zeros)
        if a.size == 0:
            t.reject()
            continue
        t.count("strong_triple_zeros", int(a.size))
        Ig = np.flatnonzero(I.component_mask(g))
        Ig2 = _products(ring, Ig, Ig)
        tests = (("acI_g", ring.mul(a, c), Ig), ("bcI_g", ring.mul(b, c), Ig),
                 ("aI_g^2", a, Ig2), ("bI_g^2", b, Ig2), ("cI_g^2", c, Ig2))
        failure = None
        for name, left, right in tests:
            hit = _first_escape(ring, value.mask, left, right)
            if hit is not None:
                k, x = hit
                failure = {"containment": name, "a": ring.format_index(a[k]), "b": ring.format_index(b[k]),
                           "c": ring.format_index(c[k]), "x": ring.format_index(x)}
                break
        t.assert_(failure is None, _inst(fx, I, phi, g), failure)


def check_t2b(fx, t):
    """With ac, bc ∉ I: I_g³ ⊆ φ(I)."""
    instances, rejected = _triple_zero_instances(fx)
    t.reject(rejected)
    ring = fx.ring.ring
    for I, phi, g, value, zeros in instances:
        a, _, _ = _strong(ring, I.mask, zeros)
        if a.size == 0:
            t.reject()
            continue
        Ig = np.flatnonzero(I.component_mask(g))
        cube = _products(ring, Ig, Ig, Ig)
        bad = cube[~value.mask[cube]]
        t.assert_(bad.size == 0, _inst(fx, I, phi, g),
                  {"xyz": ring.format_index(bad[0])} if bad.size else None)


# ---------------------------------------------------------------------------
# principal and colon criteria


def check_t3(fx, t):
    """For nonunit x ∈ R_g with (0:x) ⊆ Rx and φ ≤ φ_2: Rx g-φ-1 ⟺ Rx g-1-absorbing."""
    if not fx.sweepable:
        return
    R = fx.ring
    ring = R.ring
    memo = _memo(fx)
    phis = [p for p in _phis(fx) if p != PHI_EMPTY]
    for g in R.degrees:
        for x in R.nonunit_homogeneous(g):
            x = int(x)
            Rx = principal_ideal(R, x)
            ann = ring.annihilator(x)
            if not Rx.mask[ann].all() or Rx.mask[R.component_mask(g)].all():
                t.reject(len(phis))
                continue
            plain = memo.classify(Rx, G_PHI_ONE_ABSORBING, PHI_EMPTY, g)
            for phi in phis:
                # every member of the family is pointwise below φ_2; confirm on Rx
                if not phi_contains(memo.value(PHI_2, Rx), memo.value(phi, Rx)):
                    t.reject()
                    continue
                v = memo.classify(Rx, G_PHI_ONE_ABSORBING, phi, g)
                t.assert_(v.passed == plain.passed, _inst(fx, Rx, phi, g, x=ring.format_index(x)),
                          {"phi_verdict": v.outcome.name, "plain_verdict": plain.outcome.name,
                           **_witness(v if not v.passed else plain)})


def _units_divergence(R):
    """Elements of R_e invertible in R whose inverse lies outside R_e."""
    ring = R.ring
    comp = R.component(R.group.identity)
    units = comp[ring.units_of(comp)]
    emask = R.component_mask(R.group.identity)
    return sum(1 for u in units if not emask[ring.inverse(int(u))])


def check_t4(fx, t):
    """R_e not local and (φ(I) :_{R_e} a) never maximal ⇒ e-φ-prime ⟺ e-φ-1-absorbing."""
    R = fx.ring
    e = R.group.identity
    proper = [I for I in _ideals(fx) if e in _proper_components(R, I)]
    phis = _phis(fx)
    maximal = subring_maximal_ideals(R, e)
    divergence = _units_divergence(R)
    t.notes["units_divergence"] = divergence
    if len(maximal) < 2:
        t.reject(len(proper) * len(phis))
        return
    max_keys = {m.tobytes() for m in maximal}
    ring = R.ring
    comp = R.component(e)
    emask = R.component_mask(e)
    memo = _memo(fx)
    for I in proper:
        Ie = np.flatnonzero(I.mask & emask)
        for phi in phis:
            value = memo.value(phi, I)
            if value is not None:
                prod = ring.mul(Ie[:, None], comp[None, :])
                cols = value.mask[prod]
                hits_max = False
                for row in cols:
                    m = np.zeros(ring.size, dtype=bool)
                    m[comp[row]] = True
                    if m.tobytes() in max_keys:
                        hits_max = True
                        break
                if hits_max:
                    t.reject()
                    continue
            prime = memo.classify(I, G_PHI_PRIME, phi, e)
            absorbing = memo.classify(I, G_PHI_ONE_ABSORBING, phi, e)
            t.assert_(prime.passed == absorbing.passed, _inst(fx, I, phi, e),
                      {"e-phi-prime": prime.outcome.name, "e-phi-1-absorbing": absorbing.outcome.name})


# ---------------------------------------------------------------------------
# quotients


def _quotient(fx, J):
    memo = _memo(fx)
    key = ("quotient", J.key)
    if key not in memo.verdict:
        memo.verdict[key] = quotient_construction(fx.ring, J)
    return memo.verdict[key]


def _phi_quotients(fx):
    """(I, φ, φ(I)) over proper I and nonempty φ(I)."""
    memo = _memo(fx)
    for I in _proper(fx):
        for phi in _phis(fx):
            value = memo.value(phi, I)
            yield I, phi, value


def _weakly_in_quotient(fx, I, value):
    q = _quotient(fx, value)
    Q = q.project(I)
    return q, _memo_ring(q.ring).classify(Q, WEAKLY_ONE_ABSORBING)


def _memo_ring(R):
    cache = R._cache
    if "suite_memo" not in cache:
        cache["suite_memo"] = _Memo()
    return cache["suite_memo"]


def check_t5i(fx, t):
    """I φ-1-absorbing ⇒ I/φ(I) weakly 1-absorbing in R/φ(I)."""
    if not fx.sweepable:
        return
    for I, phi, value in _phi_quotients(fx):
        if value is None or not _memo(fx).phi1(I, phi).passed:
            t.reject()
            continue
        _, v = _weakly_in_quotient(fx, I, value)
        t.assert_(v.passed, _inst(fx, I, phi), _witness(v), vacuous=v.vacuous)


def _units_lift(fx, q):
    """U(R/J) = {u + J : u ∈ U(R)}, checked as sets."""
    ring = fx.ring.ring
    lifted = np.zeros(q.ring.size, dtype=bool)
    lifted[q.proj[ring.unit_mask()]] = True
    return bool((lifted == q.ring.ring.unit_mask()).all())


def check_t5ii(fx, t):
    """I/φ(I) weakly 1-absorbing with unit lifting ⇒ I φ-1-absorbing."""
    if not fx.sweepable:
        return
    for I, phi, value in _phi_quotients(fx):
        if value is None:
            t.reject()
            continue
        q, w = _weakly_in_quotient(fx, I, value)
        lifts = _units_lift(fx, q)
        if not lifts:
            t.count("unit_lifting_fails")
        if not w.passed or not lifts:
            t.reject()
            continue
        v = _memo(fx).phi1(I, phi)
        t.assert_(v.passed, _inst(fx, I, phi), _witness(v), vacuous=v.vacuous)


def check_t5iii(fx, t):
    """J ⊆ I and I φ-1-absorbing ⇒ I/J is φ_J-1-absorbing in R/J."""
    if not fx.sweepable:
        return
    ideals = _ideals(fx)
    for I, phi, _ in _phi_quotients(fx):
        if not _memo(fx).phi1(I, phi).passed:
            t.reject(sum(1 for J in ideals if J <= I))
            continue
        for J in ideals:
            if not J <= I:
                continue
            q = _quotient(fx, J)
            Q = q.project(I)
            v = classify_ideal(Q, Predicate(PHI_ONE_ABSORBING, induced_quotient(phi, q)))
            t.assert_(v.passed, _inst(fx, I, phi, J=_label(fx, J)), _witness(v), vacuous=v.vacuous)


# ---------------------------------------------------------------------------
# localization


def check_t6(fx, t):
    """I φ-1-absorbing, I ∩ S = ∅ ⇒ S⁻¹I is φ_S-1-absorbing in S⁻¹R."""
    R = fx.ring
    if R.size > LOCALIZATION_LIMIT:
        return
    ring = R.ring
    memo = _memo(fx)
    for S in multiplicative_sets(R):
        loc = localize(R, list(S))
        mismatch = check_localization(loc)
        label = "{" + ", ".join(ring.format_index(s) for s in S) + "}"
        if mismatch is not None:
            t.fail(f"S={label}", {"localization": mismatch})
            continue
        t.count("multiplicative_sets")
        for I in _proper(fx):
            if I.mask[list(S)].any():
                t.reject(len(_phis(fx)))
                continue
            SI = loc.extend(I)
            for phi in _phis(fx):
                if not memo.phi1(I, phi).passed:
                    t.reject()
                    continue
                value = memo.value(phi, I)
                # φ_S evaluated on this representative: S⁻¹φ(I)
                ext = None if value is None else ideal_intersection(loc.extend(value), SI)
                v = classify_ideal(SI, Predicate(PHI_ONE_ABSORBING, phi), phi_value=ext)
                t.assert_(v.passed, _inst(fx, I, phi, S=label), _witness(v), vacuous=v.vacuous)


# ---------------------------------------------------------------------------
# products


def _component(I, e):
    return I.mask & I.R.component_mask(e)


def _theta_premise(phi_val, I, psi_val, J, e):
    """θ(L_e) ≠ L_e read as (φ(I))_e × (ψ(J))_e ≠ I_e × J_e."""
    if phi_val is None or psi_val is None:
        return True
    return (
        not np.array_equal(_component(phi_val, e), _component(I, e))
        or not np.array_equal(_component(psi_val, e), _component(J, e))
    )


def _nonunit_outside(R, value, e):
    """Some nonunit of R_e lies outside (φ(R))_e."""
    comp = R.component(e)
    nonunits = comp[~R.ring.units_of(comp)]
    if value is None:
        return nonunits.size > 0
    return bool((~value.mask[nonunits]).any())


def _is_prime_component(R, I, e):
    """I_e is a prime ideal of R_e."""
    ring = R.ring
    comp = R.component(e)
    inI = I.mask
    if inI[ring.one]:
        return False
    prod = ring.mul(comp[:, None], comp[None, :])
    bad = inI[prod] & ~inI[comp][:, None] & ~inI[comp][None, :]
    return not bad.any()


def product_partners(fx, catalog):
    """Fixtures whose product with ``fx`` is swept (partners named at or after fx)."""
    out = []
    for other in catalog:
        if other.name < fx.name:
            continue
        if fx.size * other.size > PRODUCT_LIMIT:
            continue
        if fx.spec.group() != other.spec.group():
            continue
        out.append(other)
    return out


def _product_instances(fx, other):
    """Yield (P, L, I, J, φ, ψ, θ-verdict, φ(I), ψ(J)) over proper L = I × J."""
    P = product_construction(fx.ring, other.ring)
    left = enumerate_graded_ideals(fx.ring)
    right = enumerate_graded_ideals(other.ring)
    lm, rm = _memo(fx), _memo(other)
    from ..phi import product_theta

    for I in left:
        for J in right:
            L = product_ideal(P, I, J)
            if not L.is_proper():
                continue
            for phi in PHI_FAMILY:
                for psi in PHI_FAMILY:
                    theta = product_theta(phi, psi, P)
                    a, b = lm.value(phi, I), rm.value(psi, J)
                    tv = None if a is None or b is None else product_ideal(P, a, b)
                    v = classify_ideal(L, Predicate(PHI_ONE_ABSORBING, theta), phi_value=tv)
                    yield P, L, I, J, phi, psi, v, a, b


def _product_cache(fx, other):
    key = ("product_instances", other.name)
    memo = _memo(fx)
    if key not in memo.verdict:
        memo.verdict[key] = list(_product_instances(fx, other))
    return memo.verdict[key]


def _pinst(fx, other, I, J, phi, psi):
    return f"{fx.name} x {other.name}; I={_label(fx, I)}; J={_label(other, J)}; phi={phi}; psi={psi}"


def check_t7_1(fx, t, catalog):
    """L = I × J θ-1-absorbing ⇒ I φ-prime and J ψ-prime."""
    lm = _memo(fx)
    for other in product_partners(fx, catalog):
        rm = _memo(other)
        for P, L, I, J, phi, psi, v, a, b in _product_cache(fx, other):
            if not v.passed:
                t.reject()
                continue
            left = not I.is_proper() or lm.classify(I, PHI_PRIME, phi).passed
            right = not J.is_proper() or rm.classify(J, PHI_PRIME, psi).passed
            t.assert_(left and right, _pinst(fx, other, I, J, phi, psi),
                      {"I_phi_prime": left, "J_psi_prime": right})


def check_t7_2(fx, t, catalog):
    """θ-1-absorbing with θ(L_e) ≠ L_e ⇒ I = R or J = T."""
    for other in product_partners(fx, catalog):
        e = fx.ring.group.identity
        for P, L, I, J, phi, psi, v, a, b in _product_cache(fx, other):
            if not v.passed or not _theta_premise(a, I, b, J, e):
                t.reject()
                continue
            t.assert_(not I.is_proper() or not J.is_proper(), _pinst(fx, other, I, J, phi, psi),
                      {"I": _label(fx, I), "J": _label(other, J)})


def check_t7_3(fx, t, catalog):
    """Adding nonunits outside (φ(R))_e and (ψ(T))_e: the proper factor has a prime e-component."""
    for other in product_partners(fx, catalog):
        R, T = fx.ring, other.ring
        e = R.group.identity
        for P, L, I, J, phi, psi, v, a, b in _product_cache(fx, other):
            if not v.passed or not _theta_premise(a, I, b, J, e):
                t.reject()
                continue
            if not (_nonunit_outside(R, apply_phi(phi, unit_ideal(R)), e)
                    and _nonunit_outside(T, apply_phi(psi, unit_ideal(T)), e)):
                t.reject()
                continue
            if not I.is_proper():
                ok = _is_prime_component(T, J, e)
            else:
                ok = not J.is_proper() and _is_prime_component(R, I, e)
            t.assert_(ok, _pinst(fx, other, I, J, phi, psi), {"I": _label(fx, I), "J": _label(other, J)})


# ---------------------------------------------------------------------------
# graded von Neumann regular rings


def _is_boolean(R):
    ring = R.ring
    idx = ring.all_indices()
    return bool((ring.mul(idx, idx) == idx).all())


def check_s3_def_examples(fx, t):
    """Graded fields and Boolean rings are graded vNr; recorded verdicts match."""
    R = fx.ring
    result = vnr_suite(R)
    want = load_expectations()["vnr"].get(fx.name)
    if want is not None:
        t.assert_(result.is_vnr == want, f"vnr({fx.name})",
                  {"expected": want, "found": result.is_vnr, "failure": result.failure})
    if R.is_graded_field():
        t.assert_(result.is_vnr, f"graded field {fx.name}", {"failure": result.failure})
    elif R.size <= 4096 and _is_boolean(R):
        t.assert_(result.is_vnr, f"Boolean {fx.name}", {"failure": result.failure})
    elif want is None:
        t.reject()


def check_s3_l1(fx, t):
    """A homogeneous unit of degree g has its inverse in R_{g⁻¹}."""
    R = fx.ring
    ring = R.ring
    for g in R.degrees:
        comp = R.component(g)
        units = comp[ring.units_of(comp)]
        inv_mask = R.component_mask(R.group.inverse(g))
        bad = [int(u) for u in units if not inv_mask[ring.inverse(int(u))]]
        t.count("homogeneous_units", len(units))
        t.assert_(not bad, f"g={g}", {"u": ring.format_index(bad[0])} if bad else None)


def check_s3_l2(fx, t):
    """Homogeneous idempotents lie in R_e."""
    R = fx.ring
    ring = R.ring
    h = R.homogeneous
    idem = h[ring.mul(h, h) == h]
    emask = R.component_mask(R.group.identity)
    bad = idem[~emask[idem]]
    t.count("homogeneous_idempotents", int(idem.size))
    t.assert_(bad.size == 0, "homogeneous idempotents", {"x": ring.format_index(bad[0])} if bad.size else None)


def check_s3_p3(fx, t):
    """A Boolean graded ring is trivially graded, over every candidate grading."""
    from ..grading import GradingGroup, enumerate_gradings

    R = fx.ring
    if R.size > 4096 or not _is_boolean(R):
        t.reject()
        return
    e = R.group.identity
    nontrivial = [g for g in R.degrees if g != e]
    t.assert_(not nontrivial, f"grading of {fx.name}", {"degrees": nontrivial})
    if R.size > BOOLEAN_GRADING_LIMIT:
        return
    for group in (GradingGroup.parse("cyclic:2"), GradingGroup.parse("cyclic:3")):
        for G in enumerate_gradings(R.ring, group):
            extra = [g for g in G.degrees if g != G.group.identity]
            t.count("candidate_gradings")
            t.assert_(not extra, f"{fx.name} over {group}", {"degrees": extra})


def _vnr_homogeneous(fx):
    R = fx.ring
    if not vnr_suite(R).is_vnr:
        return None
    return [int(x) for x in R.witness_sort(R.homogeneous)]


def check_s3_l4(fx, t):
    """Rx = Ra for an idempotent a ∈ R_e."""
    xs = _vnr_homogeneous(fx)
    if xs is None:
        t.reject()
        return
    R = fx.ring
    ring = R.ring
    for x in xs:
        inst = f"x={ring.format_index(x)}"
        try:
            a = principal_to_idempotent(R, x).index
        except (AssertionError, GrilError) as exc:
            t.fail(inst, {"error": str(exc) or type(exc).__name__})
            continue
        ok = (int(ring.mul(a, a)) == a and R.component_mask(R.group.identity)[a]
              and principal_ideal(R, x) == principal_ideal(R, a))
        t.assert_(ok, inst, {"a": ring.format_index(a)})


def check_s3_t5(fx, t):
    """Proper Rx is almost 1-absorbing prime, with an empty hypothesis set."""
    xs = _vnr_homogeneous(fx)
    if xs is None:
        t.reject()
        return
    R = fx.ring
    seen = set()
    for x in xs:
        Rx = principal_ideal(R, x)
        if not Rx.is_proper():
            t.reject()
            continue
        if Rx.key in seen:
            continue
        seen.add(Rx.key)
        v = _memo(fx).phi1(Rx, PHI_2)
        t.assert_(v.vacuous, _inst(fx, Rx, PHI_2), {"outcome": v.outcome.name, **_witness(v)}, vacuous=True)


def check_s3_p6(fx, t):
    """R = Rx + J and Rx ∩ J = 0 for an idempotent graded J."""
    xs = _vnr_homogeneous(fx)
    if xs is None:
        t.reject()
        return
    R = fx.ring
    for x in xs:
        inst = f"x={R.ring.format_index(x)}"
        try:
            Rx, J = vnr_decomposition(R, x)
        except (AssertionError, GrilError) as exc:
            t.fail(inst, {"error": str(exc) or type(exc).__name__})
            continue
        ok = (ideal_product(J, J) == J and ideal_sum(Rx, J) == unit_ideal(R)
              and ideal_intersection(Rx, J).is_zero())
        t.assert_(ok, inst, {"Rx": Rx, "J": J})


def check_s3_cor(fx, t):
    """R is the direct sum of two idempotent graded ideals."""
    xs = _vnr_homogeneous(fx)
    if xs is None:
        t.reject()
        return
    R = fx.ring
    for x in xs:
        Rx, J = vnr_decomposition(R, x)
        ok = (ideal_product(Rx, Rx) == Rx and ideal_product(J, J) == J
              and ideal_sum(Rx, J) == unit_ideal(R) and ideal_intersection(Rx, J).is_zero())
        t.assert_(ok, f"x={R.ring.format_index(x)}", {"Rx": Rx, "J": J})


# ---------------------------------------------------------------------------
# worked examples


def _example_check(check_id):
    def run(fx, t):
        R = fx.ring
        for e in load_expectations()["verdicts"]:
            if e["check"] != check_id or e["fixture"] != fx.name:
                continue
            I = fx.ideals[e["ideal"]]
            phi = e.get("phi")
            v = _memo(fx).classify(I, e["predicate"], None if phi is None else _parse_phi(phi))
            inst = _inst(fx, I, phi, predicate=e["predicate"])
            got = _witness(v)
            ok = v.outcome.name == e["outcome"]
            if "witness" in e:
                ok = ok and got == {k: str(R.element(s)) for k, s in e["witness"].items()}
            if e.get("product_zero"):
                prod = R.ring.one
                for _, el in v.witness:
                    prod = int(R.ring.mul(prod, el.index))
                ok = ok and prod == 0
            if not ok:
                t.fail(inst, {"expected": e["outcome"], "found": v.outcome.name, **got})
            elif e.get("counterexample"):
                t.expected(inst, got, f"{e['predicate']} fails as recorded")
            else:
                t.ok(vacuous=v.vacuous)

    run.__doc__ = f"Recorded verdicts for {check_id}."
    return run


def _parse_phi(text):
    from ..phi import parse_phi

    return parse_phi(text)


# ---------------------------------------------------------------------------
# registry


@dataclass(frozen=True)
class TheoremCheck:
    id: str
    run: object
    summary: str
    needs_catalog: bool = False


def _reg(id, fn, needs_catalog=False):
    return TheoremCheck(id, fn, (fn.__doc__ or "").strip().splitlines()[0], needs_catalog)


REGISTRY = (
    _reg("P1.1", check_p1_1),
    _reg("P1.2", check_p1_2),
    _reg("P1.3", check_p1_3),
    _reg("P1.4", check_p1_4),
    _reg("R1", check_r1),
    _reg("R1-Cor", check_r1_cor),
    _reg("L1", check_l1),
    _reg("L1-Cor", check_l1_cor),
    _reg("T1-chain", check_t1_chain),
    _reg("T1-counterexample", check_t1_counterexample),
    _reg("T1g-equiv", check_t1g_equiv),
    _reg("T2", check_t2),
    _reg("T2a", check_t2a),
    _reg("T2b", check_t2b),
    _reg("T3", check_t3),
    _reg("T4", check_t4),
    _reg("T5i", check_t5i),
    _reg("T5ii", check_t5ii),
    _reg("T5iii", check_t5iii),
    _reg("T6", check_t6),
    _reg("T7.1", check_t7_1, True),
    _reg("T7.2", check_t7_2, True),
    _reg("T7.3", check_t7_3, True),
    _reg("S3-def-examples", check_s3_def_examples),
    _reg("S3-L1", check_s3_l1),
    _reg("S3-L2", check_s3_l2),
    _reg("S3-P3", check_s3_p3),
    _reg("S3-L4", check_s3_l4),
    _reg("S3-T5", check_s3_t5),
    _reg("S3-P6", check_s3_p6),
    _reg("S3-Cor", check_s3_cor),
    _reg("EX2", _example_check("EX2")),
    _reg("EX3", _example_check("EX3")),
    _reg("EX4", _example_check("EX4")),
)

CHECK_IDS = tuple(c.id for c in REGISTRY)
_BY_ID = {c.id: c for c in REGISTRY}


def get_check(check_id):
    try:
        return _BY_ID[check_id]
    except KeyError:
        raise UnknownCheckError(f"unknown check {check_id!r}") from None


def run_check(check_id, fixtures):
    """One record per fixture for the named check."""
    check = get_check(check_id)
    fixtures = sorted(fixtures, key=lambda f: f.name)
    records = []
    for fx in fixtures:
        t = Tally(check_id, fx.name)
        if check.needs_catalog:
            check.run(fx, t, fixtures)
        else:
            check.run(fx, t)
        records.append(t.record())
    return records


def summarize(records):
    keys = ("instances", "passed", "vacuous", "premise_rejected")
    out = {k: sum(r[k] for r in records) for k in keys}
    out["expected_counterexamples"] = sum(len(r["expected_counterexamples"]) for r in records)
    out["failures"] = sum(len(r["failures"]) for r in records)
    out["ok"] = out["failures"] == 0
    return out


def run_all(fixtures, checks=None):
    """Every registered check (or the given ids) over the fixtures, in registry order."""
    ids = CHECK_IDS if checks is None else tuple(checks)
    for i in ids:
        get_check(i)
    records = []
    for i in ids:
        records.extend(run_check(i, fixtures))
    return {
        "format": REPORT_FORMAT,
        "fixtures": sorted(f.name for f in fixtures),
        "checks": list(ids),
        "records": records,
        "summary": summarize(records),
    }
