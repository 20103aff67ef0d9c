"""Graded ideals and the constructions built on them.

Ideals are materialised as boolean membership masks over the ambient ring,
together with an additive generating set used for products and sums.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from . import config
from .errors import (
    AmbientMismatchError,
    BadMultiplicativeSetError,
    GroupMismatchError,
    ImproperIdealError,
    MixedRingsError,
    NonHomogeneousGeneratorError,
    SizeExceededError,
)
from .grading import InducedGradedRing, PresentedGradedRing
from .rings import PresentedRing, Product, RingElement, TableRing


def additive_span(ring, gens, mask=None):
    """Additive subgroup generated by ``gens`` (on top of the subgroup ``mask``).

    Returns the membership mask and the generators that actually enlarged it.
    """
    if mask is None:
        mask = np.zeros(ring.size, dtype=bool)
        mask[0] = True
    else:
        mask = mask.copy()
    elems = np.flatnonzero(mask)
    used = []
    for t in gens:
        t = int(t)
        if mask[t]:
            continue
        used.append(t)
        parts, k = [elems], t
        # S + <t> is the disjoint union of cosets S + m*t until m*t falls in S
        while not mask[k]:
            parts.append(ring.add(elems, k))
            k = int(ring.add(k, t))
        elems = np.concatenate(parts)
        mask[elems] = True
    return mask, used


def additive_basis(ring, indices):
    """A generating set of the additive subgroup consisting of ``indices``."""
    mask = np.zeros(ring.size, dtype=bool)
    mask[0] = True
    basis = []
    for i in np.asarray(indices, dtype=np.int64):
        if not mask[i]:
            mask, used = additive_span(ring, [i], mask)
            basis.extend(used)
    return basis


def _as_index(R, x):
    if isinstance(x, RingElement):
        if x.ring is not R.ring:
            raise MixedRingsError("element belongs to a different ring")
        return x.index
    if isinstance(x, (str, tuple, list)):
        return R.element(x).index
    return int(x)


class GradedIdeal:
    """A graded ideal with its full element set.

    Equality and hashing go by the element set; ``generators`` only records
    how the ideal was produced.
    """

    def __init__(self, R, mask, basis=None, generators=()):
        self.R = R
        mask = np.asarray(mask, dtype=bool)
        mask.setflags(write=False)
        self.mask = mask
        self._basis = None if basis is None else list(basis)
        self.generators = tuple(generators)
        self._elements = None
        self._key = None

    @property
    def ring(self):
        return self.R

    @property
    def elements(self):
        if self._elements is None:
            self._elements = np.flatnonzero(self.mask)
        return self._elements

    @property
    def size(self):
        return int(self.elements.size)

    def __len__(self):
        return self.size

    @property
    def basis(self):
        if self._basis is None:
            self._basis = additive_basis(self.R.ring, self.elements)
        return self._basis

    @property
    def key(self):
        if self._key is None:
            self._key = np.packbits(self.mask).tobytes()
        return self._key

    def __eq__(self, other):
        if not isinstance(other, GradedIdeal):
            return NotImplemented
        return other.R is self.R and other.key == self.key

    def __hash__(self):
        return hash(self.key)

    def __le__(self, other):
        _same(self, other)
        return not (self.mask & ~other.mask).any()

    def __lt__(self, other):
        return self <= other and self != other

    def __contains__(self, x):
        return bool(self.mask[_as_index(self.R, x)])

    def is_proper(self):
        return not self.mask[self.R.ring.one]

    def is_zero(self):
        return self.size == 1

    def component(self, g):
        """``I_g = I ∩ R_g`` as sorted indices."""
        return np.flatnonzero(self.mask & self.R.component_mask(g))

    def component_mask(self, g):
        return self.mask & self.R.component_mask(g)

    def as_elements(self):
        return [RingElement(self.R.ring, int(i)) for i in self.elements]

    def sort_key(self):
        return (self.size, tuple(int(i) for i in self.elements))

    def homogeneous_generators(self):
        """A generating set of homogeneous elements, chosen greedily in witness order."""
        if self.generators:
            return self.generators
        R = self.R
        cand = R.witness_sort(np.flatnonzero(self.mask & R.homog_mask))
        mask = np.zeros(R.size, dtype=bool)
        mask[0] = True
        gens = []
        for h in cand:
            if not mask[h]:
                mask, _ = _principal_span(R, int(h), mask)
                gens.append(int(h))
        self.generators = tuple(gens) or (0,)
        return self.generators

    def __repr__(self):
        ring = self.R.ring
        gens = ", ".join(ring.format_index(g) for g in self.homogeneous_generators())
        return f"<{gens}>"


def _same(I, J):
    if I.R is not J.R:
        raise MixedRingsError("ideals live in different rings")


def ideal_from_mask(R, mask):
    return GradedIdeal(R, mask)


def zero_ideal(R):
    mask = np.zeros(R.size, dtype=bool)
    mask[0] = True
    return GradedIdeal(R, mask, basis=[], generators=(0,))


def unit_ideal(R):
    return GradedIdeal(R, np.ones(R.size, dtype=bool), basis=None, generators=(R.ring.one,))


def _principal_span(R, x, mask=None):
    gens = R.ring.mul(x, np.array(R.ring.additive_generators(), dtype=np.int64))
    return additive_span(R.ring, np.atleast_1d(gens), mask)


def generate_graded_ideal(R, gens):
    """Smallest ideal containing the homogeneous generators ``gens``."""
    idx = [_as_index(R, g) for g in gens]
    for g in idx:
        if not R.is_homogeneous(g):
            raise NonHomogeneousGeneratorError(
                f"{R.ring.format_index(g)} is not homogeneous"
            )
    mask = np.zeros(R.size, dtype=bool)
    mask[0] = True
    basis = []
    for g in idx:
        mask, used = _principal_span(R, g, mask)
        basis.extend(used)
    return GradedIdeal(R, mask, basis, generators=tuple(g for g in idx if g != 0) or (0,))


def principal_ideal(R, x):
    return generate_graded_ideal(R, [x])


def ideal_sum(I, J):
    _same(I, J)
    mask, used = additive_span(I.R.ring, J.basis, I.mask)
    return GradedIdeal(I.R, mask, I.basis + used)


def ideal_product(I, J):
    _same(I, J)
    ring = I.R.ring
    a = np.array(I.basis, dtype=np.int64)
    b = np.array(J.basis, dtype=np.int64)
    if a.size == 0 or b.size == 0:
        return zero_ideal(I.R)
    prods = ring.mul(a[:, None], b[None, :]).ravel()
    mask, used = additive_span(ring, prods)
    return GradedIdeal(I.R, mask, used)


def ideal_power(I, n):
    if n < 1:
        raise ValueError("ideal powers start at 1")
    result = I
    for _ in range(n - 1):
        result = ideal_product(result, I)
    return result


def ideal_intersection(I, J):
    _same(I, J)
    return GradedIdeal(I.R, I.mask & J.mask)


def ideal_algebra(op, I, J=None, n=None):
    """``SUM``, ``PRODUCT``, ``INTERSECTION`` or ``POWER`` (with ``n``)."""
    op = op.upper()
    if op == "POWER":
        if n is None or n < 1:
            raise ValueError("POWER needs n >= 1")
        return ideal_power(I, n)
    if J is None:
        raise ValueError(f"{op} needs two ideals")
    return {"SUM": ideal_sum, "PRODUCT": ideal_product, "INTERSECTION": ideal_intersection}[op](I, J)


def colon_mask(I, x, restrict_to=None):
    """Mask of ``(I : x)``, or of ``(I :_{R_g} x)`` when ``restrict_to=g``.

    ``I`` may be None (the empty set), in which case the colon is empty.
    """
    R = I.R if I is not None else None
    if I is None:
        raise ValueError("colon against the empty set needs an ambient ring")
    prods = R.ring.mul(int(x), R.ring.all_indices())
    mask = I.mask[prods]
    if restrict_to is not None:
        mask = mask & R.component_mask(restrict_to)
    return mask


def colon(I, x, restrict_to=None):
    x = _as_index(I.R, x)
    return [RingElement(I.R.ring, int(i)) for i in np.flatnonzero(colon_mask(I, x, restrict_to))]


# ---------------------------------------------------------------------------
# enumeration


def enumerate_graded_ideals(R):
    """All graded ideals, ordered by size then by sorted element list."""
    cached = R._cache.get("graded_ideals")
    if cached is not None:
        return cached
    if R.homogeneous.size > config.max_enum_size():
        raise SizeExceededError(
            f"{R.homogeneous.size} homogeneous elements exceed the enumeration bound"
        )
    principals = {}
    for h in R.homogeneous:
        P = principal_ideal(R, int(h))
        principals.setdefault(P.key, P)
    principals = list(principals.values())
    zero = zero_ideal(R)
    found = {zero.key: zero}
    queue = [zero]
    while queue:
        I = queue.pop()
        for P in principals:
            if P <= I:
                continue
            S = ideal_sum(I, P)
            if S.key not in found:
                found[S.key] = S
                queue.append(S)
    ideals = sorted(found.values(), key=GradedIdeal.sort_key)
    R._cache["graded_ideals"] = ideals
    return ideals


@dataclass(frozen=True)
class SpectrumInfo:
    graded_maximal: list
    is_graded_local: bool
    unique_maximal: object = None


def graded_spectrum_tools(R):
    proper = [I for I in enumerate_graded_ideals(R) if I.is_proper()]
    maximal = [I for I in proper if not any(I < J for J in proper)]
    local = len(maximal) == 1
    return SpectrumInfo(maximal, local, maximal[0] if local else None)


def ideal_index(R):
    """Map from ideal key to position in the enumeration."""
    cached = R._cache.get("ideal_index")
    if cached is None:
        cached = {I.key: k for k, I in enumerate(enumerate_graded_ideals(R))}
        R._cache["ideal_index"] = cached
    return cached


def product_table(R):
    """``T[i, j]`` = position of ``I_i * I_j`` in the enumeration."""
    cached = R._cache.get("product_table")
    if cached is None:
        ideals = enumerate_graded_ideals(R)
        index = ideal_index(R)
        n = len(ideals)
        cached = np.zeros((n, n), dtype=np.int64)
        for i in range(n):
            for j in range(i, n):
                k = index[ideal_product(ideals[i], ideals[j]).key]
                cached[i, j] = cached[j, i] = k
        R._cache["product_table"] = cached
    return cached


def containment_matrix(R):
    """``C[i, j]`` is True iff ``I_i`` is contained in ``I_j``."""
    cached = R._cache.get("containment")
    if cached is None:
        masks = np.array([I.mask for I in enumerate_graded_ideals(R)])
        outside = (~masks).astype(np.int32)
        cached = (masks.astype(np.int32) @ outside.T) == 0
        R._cache["containment"] = cached
    return cached


def subring_ideals(R, g=None):
    """Ideals of the subring ``R_e``, as masks over the ambient ring."""
    g = R.group.identity if g is None else g
    key = ("subring_ideals", g)
    if key in R._cache:
        return R._cache[key]
    ring = R.ring
    comp = R.component(g)
    basis = np.array(additive_basis(ring, comp), dtype=np.int64)
    principals = {}
    for x in comp:
        gens = ring.mul(int(x), basis) if basis.size else np.zeros(0, dtype=np.int64)
        mask, _ = additive_span(ring, np.atleast_1d(gens))
        principals.setdefault(mask.tobytes(), mask)
    principals = list(principals.values())
    zero = np.zeros(ring.size, dtype=bool)
    zero[0] = True
    found = {zero.tobytes(): zero}
    queue = [zero]
    while queue:
        m = queue.pop()
        for p in principals:
            if not (p & ~m).any():
                continue
            s, _ = additive_span(ring, np.flatnonzero(p), m)
            if s.tobytes() not in found:
                found[s.tobytes()] = s
                queue.append(s)
    result = sorted(found.values(), key=lambda m: (int(m.sum()), tuple(np.flatnonzero(m))))
    R._cache[key] = result
    return result


def subring_maximal_ideals(R, g=None):
    one = R.ring.one
    proper = [m for m in subring_ideals(R, g) if not m[one]]
    return [m for m in proper if not any((m & ~q).sum() == 0 and (q & ~m).any() for q in proper)]


# ---------------------------------------------------------------------------
# quotients


@dataclass
class Quotient:
    """``R/J`` with the projection and lift between ideal lattices."""

    ring: InducedGradedRing
    parent: object
    kernel: GradedIdeal

    @property
    def proj(self):
        return self.ring.ring.proj

    def project_index(self, x):
        return int(self.proj[int(x)])

    def project(self, I):
        if I.R is not self.parent:
            raise AmbientMismatchError("ideal does not live in the parent ring")
        mask = np.zeros(self.ring.size, dtype=bool)
        mask[self.proj[I.elements]] = True
        return GradedIdeal(self.ring, mask)

    def lift(self, Q):
        if Q.R is not self.ring:
            raise AmbientMismatchError("ideal does not live in the quotient ring")
        return GradedIdeal(self.parent, Q.mask[self.proj])


def quotient_construction(R, J, name=None):
    if J.R is not R:
        raise AmbientMismatchError("J is not an ideal of R")
    if not J.is_proper():
        raise ImproperIdealError("cannot form the quotient by the unit ideal")
    ring = R.ring
    proj = np.full(R.size, -1, dtype=np.int64)
    reps = []
    jel = J.elements
    for x in range(R.size):
        if proj[x] < 0:
            proj[ring.add(jel, x)] = len(reps)
            reps.append(x)
    table = TableRing(ring, reps, proj)
    Q = InducedGradedRing(R, table, name=name or f"{R.name or 'R'}/{J!r}")
    return Quotient(Q, R, J)


# ---------------------------------------------------------------------------
# localization


@dataclass
class Localization:
    """``S^{-1}R`` realised as ``R/K`` with ``K = {r : sr = 0 for some s in S}``."""

    quotient: Quotient
    S: tuple

    @property
    def ring(self):
        return self.quotient.ring

    @property
    def parent(self):
        return self.quotient.parent

    @property
    def kernel(self):
        return self.quotient.kernel

    def canonical(self, x):
        return self.quotient.project_index(x)

    def extend(self, I):
        """``S^{-1}I`` as an ideal of the localization."""
        return self.quotient.project(ideal_sum(I, self.kernel))


def check_multiplicative_set(R, S):
    S = sorted({_as_index(R, s) for s in S})
    if 0 in S:
        raise BadMultiplicativeSetError("S contains 0")
    if R.ring.one not in S:
        raise BadMultiplicativeSetError("S does not contain 1")
    for s in S:
        if not R.is_homogeneous(s):
            raise BadMultiplicativeSetError(f"{R.ring.format_index(s)} is not homogeneous")
    arr = np.array(S, dtype=np.int64)
    prods = R.ring.mul(arr[:, None], arr[None, :])
    member = np.zeros(R.size, dtype=bool)
    member[arr] = True
    if not member[prods].all():
        raise BadMultiplicativeSetError("S is not multiplicatively closed")
    return tuple(S)


def localization_kernel(R, S):
    ring = R.ring
    allidx = ring.all_indices()
    mask = np.zeros(R.size, dtype=bool)
    for s in S:
        mask |= ring.mul(int(s), allidx) == 0
    return GradedIdeal(R, mask)


def localize(R, S):
    S = check_multiplicative_set(R, S)
    K = localization_kernel(R, S)
    q = quotient_construction(R, K, name=f"S^-1 {R.name or 'R'}")
    return Localization(q, S)


def multiplicative_sets(R, limit=None):
    """All homogeneous multiplicative sets (1 in S, 0 not in S, closed)."""
    ring = R.ring
    candidates = [int(h) for h in R.homogeneous if h != 0]
    one = ring.one

    def close(members):
        members = set(members)
        frontier = list(members)
        while frontier:
            new = []
            arr = np.array(sorted(members), dtype=np.int64)
            for x in frontier:
                for y in ring.mul(x, arr):
                    y = int(y)
                    if y not in members:
                        members.add(y)
                        new.append(y)
            frontier = new
        return frozenset(members)

    start = close({one})
    found = {start}
    queue = [start]
    while queue:
        S = queue.pop()
        for h in candidates:
            if h in S:
                continue
            T = close(S | {h})
            if 0 in T or T in found:
                continue
            found.add(T)
            queue.append(T)
            if limit is not None and len(found) > limit:
                raise SizeExceededError("too many multiplicative sets")
    return sorted((tuple(sorted(S)) for S in found), key=lambda s: (len(s), s))


@dataclass
class FractionRing:
    """Formal fractions ``a/s`` modulo ``u(at - bs) = 0``; an independent oracle."""

    pairs: np.ndarray
    cls: np.ndarray
    add_table: np.ndarray
    mul_table: np.ndarray
    canonical: np.ndarray = field(repr=False)


def formal_fractions(R, S):
    ring = R.ring
    S = np.array(sorted(S), dtype=np.int64)
    allidx = ring.all_indices()
    killed = np.zeros(R.size, dtype=bool)
    for u in S:
        killed |= ring.mul(int(u), allidx) == 0
    A = np.repeat(allidx, S.size)
    D = np.tile(S, R.size)
    cls = np.full(A.size, -1, dtype=np.int64)
    reps = []
    for p in range(A.size):
        if cls[p] >= 0:
            continue
        diff = ring.sub(ring.mul(A[p], D), ring.mul(A, D[p]))
        same = killed[diff] & (cls < 0)
        cls[same] = len(reps)
        reps.append(p)
    reps = np.array(reps, dtype=np.int64)
    n = reps.size
    lookup = {(int(a), int(d)): int(c) for a, d, c in zip(A, D, cls)}

    def class_of(a, d):
        # (a, d) with d in S is a listed pair
        return lookup[(int(a), int(d))]

    add_table = np.zeros((n, n), dtype=np.int64)
    mul_table = np.zeros((n, n), dtype=np.int64)
    for i, p in enumerate(reps):
        for j, q in enumerate(reps):
            a, s, b, t = A[p], D[p], A[q], D[q]
            st = int(ring.mul(s, t))
            num = int(ring.add(ring.mul(a, t), ring.mul(b, s)))
            add_table[i, j] = class_of(num, st)
            mul_table[i, j] = class_of(int(ring.mul(a, b)), st)
    canonical = np.array([class_of(r, ring.one) for r in range(R.size)], dtype=np.int64)
    return FractionRing(np.stack([A, D], axis=1), cls, add_table, mul_table, canonical)


def check_localization(loc):
    """Verify ``R/K`` against the formal-fraction oracle by exhaustive bijection.

    Returns None on success, otherwise a description of the first mismatch.
    """
    R = loc.parent
    frac = formal_fractions(R, loc.S)
    Q = loc.ring.ring
    if frac.add_table.shape[0] != Q.size:
        return f"size mismatch: R/K has {Q.size} elements, fractions {frac.add_table.shape[0]}"
    # candidate bijection: coset of r  ->  class of r/1
    f = frac.canonical[Q.reps]
    if np.unique(f).size != Q.size:
        return "r/1 map is not injective on R/K"
    for r in range(R.size):
        if f[Q.proj[r]] != frac.canonical[r]:
            return f"canonical maps disagree at {R.ring.format_index(r)}"
    allq = Q.all_indices()
    if not (f[Q.add(allq[:, None], allq[None, :])] == frac.add_table[f[:, None], f[None, :]]).all():
        return "addition is not preserved"
    if not (f[Q.mul(allq[:, None], allq[None, :])] == frac.mul_table[f[:, None], f[None, :]]).all():
        return "multiplication is not preserved"
    for s in loc.S:
        if not Q.is_unit(Q.proj[s]):
            return f"image of {R.ring.format_index(s)} is not a unit"
    return None


# ---------------------------------------------------------------------------
# products


class ProductGradedRing(PresentedGradedRing):
    """``R x T`` with ``(R x T)_g = R_g x T_g``; element index is ``i*|T| + j``."""

    def __init__(self, left, right, name=None):
        ring = PresentedRing(Product((left.ring.presentation, right.ring.presentation)))
        degrees = left.coord_degrees + right.coord_degrees
        self.left = left
        self.right = right
        super().__init__(ring, left.group, degrees, name or f"{left.name} x {right.name}")

    def pair(self, i, j):
        return int(i) * self.right.size + int(j)

    def split_index(self, k):
        return divmod(int(k), self.right.size)

    def split_ideal(self, L):
        grid = L.mask.reshape(self.left.size, self.right.size)
        I = GradedIdeal(self.left, grid.any(axis=1))
        J = GradedIdeal(self.right, grid.any(axis=0))
        if not (np.outer(I.mask, J.mask) == grid).all():
            raise ValueError("ideal is not a product of ideals")
        return I, J


def product_construction(R, T, name=None):
    if R.group != T.group:
        raise GroupMismatchError(f"{R.group} vs {T.group}")
    if not (isinstance(R, PresentedGradedRing) and isinstance(T, PresentedGradedRing)):
        raise TypeError("products are built from presented graded rings")
    return ProductGradedRing(R, T, name)


def product_ideal(P, I, J):
    if I.R is not P.left or J.R is not P.right:
        raise AmbientMismatchError("factor ideals do not match the product ring")
    return GradedIdeal(P, np.outer(I.mask, J.mask).ravel())
