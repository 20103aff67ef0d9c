"""Ideal-class predicates, the six-condition characterisation, and triple zeros.

All quantifiers are exhaustive. Candidate elements are scanned in witness
order (see ``GradedRing.witness_sort``) and tuples in lexicographic order of
their positions, so the reported witness is the first violation. For the
1-absorbing family a violation with ``ac ∉ I`` and ``bc ∉ I`` is preferred
when one exists, since that is the informative kind of counterexample.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import ImproperIdealError, PredicateNotSatisfiedError
from .ideals import (
    additive_span,
    enumerate_graded_ideals,
    ideal_index,
    principal_ideal,
    product_table,
)
from .phi import PHI_2, PHI_EMPTY, PHI_ZERO, apply_phi, parse_phi
from .rings import RingElement
from .verdict import Outcome, Verdict

# ---------------------------------------------------------------------------
# predicate identifiers

PRIME = "prime"
WEAKLY_PRIME = "weakly-prime"
ALMOST_PRIME = "almost-prime"
PHI_PRIME = "phi-prime"
TWO_ABSORBING = "2-absorbing"
WEAKLY_TWO_ABSORBING = "weakly-2-absorbing"
ONE_ABSORBING = "1-absorbing"
WEAKLY_ONE_ABSORBING = "weakly-1-absorbing"
PHI_ONE_ABSORBING = "phi-1-absorbing"
G_PHI_ONE_ABSORBING = "g-phi-1-absorbing"
G_PHI_PRIME = "g-phi-prime"

PREDICATE_IDS = (
    PRIME,
    WEAKLY_PRIME,
    ALMOST_PRIME,
    PHI_PRIME,
    TWO_ABSORBING,
    WEAKLY_TWO_ABSORBING,
    ONE_ABSORBING,
    WEAKLY_ONE_ABSORBING,
    PHI_ONE_ABSORBING,
    G_PHI_ONE_ABSORBING,
    G_PHI_PRIME,
)

_FIXED_PHI = {
    PRIME: PHI_EMPTY,
    WEAKLY_PRIME: PHI_ZERO,
    ALMOST_PRIME: PHI_2,
    TWO_ABSORBING: PHI_EMPTY,
    WEAKLY_TWO_ABSORBING: PHI_ZERO,
    ONE_ABSORBING: PHI_EMPTY,
    WEAKLY_ONE_ABSORBING: PHI_ZERO,
}

LITERAL = "literal"
PROOF = "proof"

_PAIR = {PRIME, WEAKLY_PRIME, ALMOST_PRIME, PHI_PRIME, G_PHI_PRIME}
_GRADED_COMPONENT = {G_PHI_ONE_ABSORBING, G_PHI_PRIME}


@dataclass(frozen=True)
class Predicate:
    kind: str
    phi: object = None
    g: int | None = None

    def __post_init__(self):
        if self.kind not in PREDICATE_IDS:
            raise ValueError(f"unknown predicate {self.kind!r}")

    @property
    def effective_phi(self):
        fixed = _FIXED_PHI.get(self.kind)
        if fixed is not None:
            return fixed
        return PHI_EMPTY if self.phi is None else self.phi

    def __str__(self):
        parts = [self.kind]
        if self.kind not in _FIXED_PHI and self.phi is not None:
            parts.append(f"phi={self.phi}")
        if self.kind in _GRADED_COMPONENT:
            parts.append(f"g={self.g}")
        return " ".join(parts)


def parse_predicate(kind, phi=None, g=None):
    if isinstance(phi, str):
        phi = parse_phi(phi)
    return Predicate(kind, phi, g)


# ---------------------------------------------------------------------------
# helpers


def _phi_mask(R, value):
    if value is None:
        return np.zeros(R.size, dtype=bool)
    return value.mask


def _el(R, i):
    return RingElement(R.ring, int(i))


def _check_proper(I, kind, g):
    R = I.R
    if kind in _GRADED_COMPONENT:
        comp = R.component_mask(g)
        if (I.mask[comp]).all():
            raise ImproperIdealError(f"I_{g} = R_{g}")
    elif not I.is_proper():
        raise ImproperIdealError("the predicate is defined for proper ideals")


def _sorted_homogeneous(R):
    key = "homogeneous_sorted"
    if key not in R._cache:
        R._cache[key] = R.witness_sort(R.homogeneous)
    return R._cache[key]


def _sorted_component(R, g):
    key = ("component_sorted", g)
    if key not in R._cache:
        R._cache[key] = R.witness_sort(R.component(g))
    return R._cache[key]


def _pair_scan(R, inI, hyp, A, B):
    """First (a, b) with ab in the hypothesis set and a, b not in I."""
    P = R.ring.mul(A[:, None], B[None, :])
    viol = hyp[P] & ~inI[A][:, None] & ~inI[B][None, :]
    hits = np.argwhere(viol)
    if hits.size == 0:
        return None
    i, j = hits[0]
    return int(A[i]), int(B[j])


def _triple_scan(R, inI, hyp, A, B, C, two_absorbing=False, strong=False):
    """First violating (a, b, c), optionally preferring a strong violation."""
    ring = R.ring
    if not hyp.any() or A.size == 0 or B.size == 0 or C.size == 0:
        return None, False
    BC = ring.mul(B[:, None], C[None, :])
    bc_in = inI[BC]
    c_in = inI[C]
    first = None
    for a in A:
        a = int(a)
        AB = ring.mul(a, B)
        ABC = ring.mul(AB[:, None], C[None, :])
        h = hyp[ABC]
        if not h.any():
            continue
        ac_in = inI[ring.mul(a, C)]
        if two_absorbing:
            ok = inI[AB][:, None] | ac_in[None, :] | bc_in
        else:
            ok = inI[AB][:, None] | c_in[None, :]
        viol = h & ~ok
        if not viol.any():
            continue
        if first is None:
            j, k = np.argwhere(viol)[0]
            first = (a, int(B[j]), int(C[k]))
            if not strong:
                return first, False
        s = viol & ~ac_in[None, :] & ~bc_in
        if s.any():
            j, k = np.argwhere(s)[0]
            return (a, int(B[j]), int(C[k])), True
    return first, False


# ---------------------------------------------------------------------------
# classification


def classify_ideal(I, predicate, phi_value=...):
    """Evaluate ``predicate`` on the graded ideal ``I``.

    ``phi_value`` may carry a precomputed ``φ(I)`` (None meaning empty).
    """
    if isinstance(predicate, str):
        predicate = Predicate(predicate)
    R = I.R
    kind = predicate.kind
    g = predicate.g
    if kind in _GRADED_COMPONENT and g is None:
        g = R.group.identity
    _check_proper(I, kind, g)
    phi = predicate.effective_phi
    value = apply_phi(phi, I) if phi_value is ... else phi_value
    inI = I.mask
    hyp = inI & ~_phi_mask(R, value)
    if not hyp.any():
        return Verdict(Outcome.VACUOUS, notes=f"I - {phi}(I) is empty")

    if kind in _PAIR:
        A = _sorted_component(R, g) if kind == G_PHI_PRIME else _sorted_homogeneous(R)
        hit = _pair_scan(R, inI, hyp, A, A)
        if hit is None:
            return Verdict.ok()
        a, b = hit
        return Verdict.fail(("a", _el(R, a)), ("b", _el(R, b)))

    if kind in (TWO_ABSORBING, WEAKLY_TWO_ABSORBING):
        A = _sorted_homogeneous(R)
        hit, _ = _triple_scan(R, inI, hyp, A, A, A, two_absorbing=True)
        notes = "" if not I.is_zero() else "I is the zero ideal"
        if hit is None:
            return Verdict.ok(notes)
        return Verdict.fail(*zip("abc", (_el(R, x) for x in hit)), notes=notes)

    A = R.nonunit_homogeneous(g) if kind == G_PHI_ONE_ABSORBING else R.nonunit_homogeneous()
    hit, strong = _triple_scan(R, inI, hyp, A, A, A, strong=True)
    if hit is None:
        return Verdict.ok()
    notes = "ac, bc not in I" if strong else ""
    return Verdict.fail(*zip("abc", (_el(R, x) for x in hit)), notes=notes)


# ---------------------------------------------------------------------------
# triple zeros


@dataclass(frozen=True)
class TripleZero:
    a: RingElement
    b: RingElement
    c: RingElement

    def as_tuple(self):
        return (self.a, self.b, self.c)

    def __repr__(self):
        return f"({self.a!r}, {self.b!r}, {self.c!r})"


def find_triple_zeros(I, g=None, phi=PHI_ZERO, phi_value=...):
    """All ``(a, b, c)`` nonunits of ``R_g`` with ``abc ∈ φ(I)``, ``ab ∉ I``, ``c ∉ I``."""
    R = I.R
    g = R.group.identity if g is None else g
    if isinstance(phi, str):
        phi = parse_phi(phi)
    value = apply_phi(phi, I) if phi_value is ... else phi_value
    verdict = classify_ideal(I, Predicate(G_PHI_ONE_ABSORBING, phi, g), phi_value=value)
    if not verdict.passed:
        raise PredicateNotSatisfiedError(f"I is not {g}-{phi}-1-absorbing prime: {verdict}")
    if value is None:
        return []
    A = R.nonunit_homogeneous(g)
    if A.size == 0:
        return []
    ring = R.ring
    inI, inPhi = I.mask, value.mask
    ab_out = ~inI[ring.mul(A[:, None], A[None, :])]
    c_out = ~inI[A]
    found = []
    for i, a in enumerate(A):
        AB = ring.mul(int(a), A)
        hits = inPhi[ring.mul(AB[:, None], A[None, :])] & ab_out[i][:, None] & c_out[None, :]
        for j, k in np.argwhere(hits):
            found.append(TripleZero(_el(R, a), _el(R, A[j]), _el(R, A[k])))
    return found


# ---------------------------------------------------------------------------
# six-condition characterisation


def _ideal_tables(R):
    """Masks of all graded ideals, their product table and principal indices."""
    cache = R._cache
    if "ideal_masks" not in cache:
        ideals = enumerate_graded_ideals(R)
        cache["ideal_masks"] = np.array([J.mask for J in ideals])
        cache["proper_ideals"] = np.array([k for k, J in enumerate(ideals) if J.is_proper()], dtype=np.int64)
    return cache["ideal_masks"], product_table(R), cache["proper_ideals"]


def _principal_index(R, x):
    memo = R._cache.setdefault("principal_index", {})
    x = int(x)
    if x not in memo:
        memo[x] = ideal_index(R)[principal_ideal(R, x).key]
    return memo[x]


def _contained(masks, target):
    """``masks[k] ⊆ target`` for each row."""
    if target is None:
        return np.zeros(len(masks), dtype=bool)
    return ~(masks & ~target).any(axis=1)


class _ComponentAlgebra:
    """Subgroups ``J_g`` of ``R_g`` and the spans of their products.

    Every set that appears in the component form of the six conditions
    (``abJ_g``, ``aJ_gK_g``, ``J_gK_gL_g`` and the partial products) is
    materialised once per ring and degree, so each (I, φ) evaluation reduces
    to containment tests on a fixed matrix.
    """

    def __init__(self, R, g, reading=LITERAL):
        self.R = R
        ring = R.ring
        self.masks, self.bases, self._keys = [], [], {}
        comp = R.component_mask(g)
        self.seeds, self.seed_ideal = [], []
        for j, J in enumerate(enumerate_graded_ideals(R)):
            m = J.mask & comp
            if reading == LITERAL and (m == comp).all():
                continue
            if reading == PROOF and not J.is_proper():
                continue
            u = self._add(m)
            if u not in self.seeds:
                self.seeds.append(u)
                self.seed_ideal.append(j)
        seeds = self.seeds
        self.pair = {(s, t): self._prod(s, t) for s in seeds for t in seeds}
        self.triple = {(st, r): self._prod(st, r) for st in set(self.pair.values()) for r in seeds}
        nu_g = R.nonunit_homogeneous(g)
        self.scalars_a = R.nonunit_homogeneous() if reading == LITERAL else nu_g
        ab = ring.mul(nu_g[:, None], nu_g[None, :]) if nu_g.size else np.zeros((0, 0), dtype=np.int64)
        self.nu_g = nu_g
        self.ab = ab
        self.scale = {}
        for p in np.unique(ab):
            for s in seeds:
                self._scale(int(p), s)
        for a in self.scalars_a:
            for s in seeds:
                self._scale(int(a), s)
            for st in set(self.pair.values()):
                self._scale(int(a), st)
        self.matrix = np.array(self.masks) if self.masks else np.zeros((0, R.size), dtype=bool)

    def _add(self, mask):
        key = np.packbits(mask).tobytes()
        u = self._keys.get(key)
        if u is None:
            u = len(self.masks)
            self._keys[key] = u
            self.masks.append(mask)
            self.bases.append(None)
        return u

    def _basis(self, u):
        if self.bases[u] is None:
            from .ideals import additive_basis

            self.bases[u] = np.array(additive_basis(self.R.ring, np.flatnonzero(self.masks[u])), dtype=np.int64)
        return self.bases[u]

    def _span(self, gens):
        mask, _ = additive_span(self.R.ring, np.ravel(gens))
        return self._add(mask)

    def _prod(self, u, v):
        a, b = self._basis(u), self._basis(v)
        if a.size == 0 or b.size == 0:
            return self._span([0])
        return self._span(self.R.ring.mul(a[:, None], b[None, :]))

    def _scale(self, x, u):
        key = (x, u)
        if key not in self.scale:
            b = self._basis(u)
            self.scale[key] = self._span(self.R.ring.mul(x, b) if b.size else [0])
        return self.scale[key]


def _component_algebra(R, g, reading):
    key = ("component_algebra", g, reading)
    if key not in R._cache:
        R._cache[key] = _ComponentAlgebra(R, g, reading)
    return R._cache[key]


def _colon_masks(R, inI, phimask, p, g):
    allidx = R.ring.all_indices()
    prods = R.ring.mul(int(p), allidx)
    col_i = inI[prods]
    col_p = phimask[prods]
    if g is not None:
        comp = R.component_mask(g)
        col_i = col_i & comp
        col_p = col_p & comp
    return col_i, col_p


def _colon_witness(R, k, g, inI, col_i, col_p):
    """Separating elements when condition (2) or (3) fails for one product ab."""
    if k == 2:
        bad = col_i & ~(inI | col_p)
        return (("x", _el(R, R.witness_min(np.flatnonzero(bad)))),) if bad.any() else ()
    outside_i = col_i & ~inI
    outside_p = col_i & ~col_p
    if g is None:
        ok = not outside_i.any() or not outside_p.any()
    else:
        ok = not outside_i.any() or (col_i == col_p).all()
    if ok:
        return ()
    return (
        ("x", _el(R, R.witness_min(np.flatnonzero(outside_i)))),
        ("y", _el(R, R.witness_min(np.flatnonzero(col_i ^ col_p)))),
    )


def _colon_condition(I, value, k, g):
    """Conditions (2) and (3); returns a Verdict."""
    R = I.R
    inI = I.mask
    phimask = _phi_mask(R, value)
    A = R.nonunit_homogeneous() if g is None else R.nonunit_homogeneous(g)
    if A.size == 0:
        return Verdict.ok()
    P = R.ring.mul(A[:, None], A[None, :])
    memo = {}
    for i in range(A.size):
        for j in range(A.size):
            p = int(P[i, j])
            if inI[p]:
                continue
            if p not in memo:
                col_i, col_p = _colon_masks(R, inI, phimask, p, g)
                memo[p] = _colon_witness(R, k, g, inI, col_i, col_p)
            if memo[p]:
                return Verdict.fail(
                    ("a", _el(R, A[i])), ("b", _el(R, A[j])), *memo[p],
                )
    return Verdict.ok()


def _ideal_conditions(I, value, k):
    """Conditions (4)-(6) over proper graded ideals, via ideal products."""
    R = I.R
    masks, T, proper = _ideal_tables(R)
    ideals = enumerate_graded_ideals(R)
    inI = _contained(masks, I.mask)
    inPhi = _contained(masks, None if value is None else value.mask)
    L = proper
    if L.size == 0:
        return Verdict.ok()
    if k == 4:
        A = R.nonunit_homogeneous()
        P = R.ring.mul(A[:, None], A[None, :])
        memo = {}
        for i in range(A.size):
            for j in range(A.size):
                p = int(P[i, j])
                if p not in memo:
                    pi = _principal_index(R, p)
                    M = T[pi, L]
                    viol = inI[M] & ~inPhi[M] & ~inI[pi] & ~inI[L]
                    memo[p] = int(L[np.argmax(viol)]) if viol.any() else None
                if memo[p] is not None:
                    return Verdict.fail(("a", _el(R, A[i])), ("b", _el(R, A[j])), ("L", ideals[memo[p]]))
        return Verdict.ok()
    if k == 5:
        for a in R.nonunit_homogeneous():
            ai = _principal_index(R, a)
            AK = T[ai, L]
            M = T[AK[:, None], L[None, :]]
            viol = inI[M] & ~inPhi[M] & ~inI[AK][:, None] & ~inI[L][None, :]
            if viol.any():
                x, y = np.argwhere(viol)[0]
                return Verdict.fail(("a", _el(R, a)), ("K", ideals[L[x]]), ("L", ideals[L[y]]))
        return Verdict.ok()
    JK = T[L[:, None], L[None, :]]
    M = T[JK[:, :, None], L[None, None, :]]
    viol = inI[M] & ~inPhi[M] & ~inI[JK][:, :, None] & ~inI[L][None, None, :]
    if viol.any():
        x, y, z = np.argwhere(viol)[0]
        return Verdict.fail(("J", ideals[L[x]]), ("K", ideals[L[y]]), ("L", ideals[L[z]]))
    return Verdict.ok()


def _component_conditions(I, value, k, g, reading):
    """Component forms of (4)-(6)."""
    R = I.R
    alg = _component_algebra(R, g, reading)
    ideals = enumerate_graded_ideals(R)
    inU = _contained(alg.matrix, I.mask)
    inPhiU = _contained(alg.matrix, None if value is None else value.mask)
    seeds = alg.seeds
    if not seeds:
        return Verdict.ok()

    def rep(s):
        return ideals[alg.seed_ideal[seeds.index(s)]]

    if k == 4:
        A = alg.nu_g
        inI = I.mask
        for i in range(A.size):
            for j in range(A.size):
                p = int(alg.ab[i, j])
                if inI[p]:
                    continue
                for s in seeds:
                    u = alg.scale[(p, s)]
                    if inU[u] and not inPhiU[u] and not inU[s]:
                        return Verdict.fail(("a", _el(R, A[i])), ("b", _el(R, A[j])), ("J", rep(s)))
        return Verdict.ok()
    if k == 5:
        for a in alg.scalars_a:
            a = int(a)
            for s in seeds:
                as_in = inU[alg.scale[(a, s)]]
                if as_in:
                    continue
                for t in seeds:
                    u = alg.scale[(a, alg.pair[(s, t)])]
                    if inU[u] and not inPhiU[u] and not inU[t]:
                        return Verdict.fail(("a", _el(R, a)), ("J", rep(s)), ("K", rep(t)))
        return Verdict.ok()
    for s in seeds:
        for t in seeds:
            st = alg.pair[(s, t)]
            if inU[st]:
                continue
            for r in seeds:
                u = alg.triple[(st, r)]
                if inU[u] and not inPhiU[u] and not inU[r]:
                    return Verdict.fail(("J", rep(s)), ("K", rep(t)), ("L", rep(r)))
    return Verdict.ok()


def theorem1_condition(k, I, phi, g=None, phi_value=..., reading=LITERAL):
    """Evaluate condition ``k`` (1..6); with ``g`` the component form.

    The component forms of (4)-(6) are read literally by default: ideals range
    over graded ``J`` with ``J_g != R_g`` and the scalar of (5) over all
    homogeneous nonunits. ``reading=PROOF`` instead lets ideals range over
    proper graded ideals and takes the scalar of (5) from ``R_g``, which is
    what the implication arguments between the conditions actually use.
    """
    if reading not in (LITERAL, PROOF):
        raise ValueError(f"unknown reading {reading!r}")
    if k not in range(1, 7):
        raise ValueError("condition index must be 1..6")
    if isinstance(phi, str):
        phi = parse_phi(phi)
    R = I.R
    value = apply_phi(phi, I) if phi_value is ... else phi_value
    if g is None:
        if not I.is_proper():
            raise ImproperIdealError("I must be proper")
    elif I.mask[R.component_mask(g)].all():
        raise ImproperIdealError(f"I_{g} = R_{g}")
    if k == 1:
        pred = Predicate(PHI_ONE_ABSORBING, phi) if g is None else Predicate(G_PHI_ONE_ABSORBING, phi, g)
        return classify_ideal(I, pred, phi_value=value)
    if k in (2, 3):
        return _colon_condition(I, value, k, g)
    if g is None:
        return _ideal_conditions(I, value, k)
    return _component_conditions(I, value, k, g, reading)
