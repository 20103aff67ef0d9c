"""Finite commutative unital rings built from a small constructor algebra.

A ring is presented as a tree of three constructors:

* :class:`ZMod` -- the integers modulo ``n``;
* :class:`QuotientPoly` -- ``base[X] / (f)`` for a monic ``f``;
* :class:`Product` -- a direct product of factors.

Every element has a canonical coordinate vector (one residue per basis
monomial). The additive group is always coordinatewise, so elements are
identified with their mixed-radix index and lexicographic order on coordinate
vectors coincides with integer order on indices. All vectorised operations in
this package work on those integer indices.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from . import config
from .errors import MixedRingsError, SizeExceededError


# ---------------------------------------------------------------------------
# presentations


@dataclass(frozen=True)
class ZMod:
    n: int

    def __post_init__(self):
        if self.n < 2:
            raise ValueError(f"ZMod modulus must be >= 2, got {self.n}")


@dataclass(frozen=True)
class QuotientPoly:
    """``base[var] / (modulus)``; ``modulus`` holds base coordinate tuples, low degree first."""

    base: object
    modulus: tuple
    var: str = "X"
    truncation: int | None = None

    @property
    def degree(self):
        return len(self.modulus) - 1


@dataclass(frozen=True)
class Product:
    factors: tuple

    def __post_init__(self):
        if len(self.factors) < 2:
            raise ValueError("a product needs at least two factors")


def quotient_poly(base, modulus=None, *, truncate=None, var="X"):
    """Build ``base[var]/(f)``.

    ``modulus`` lists the coefficients of ``f`` from the constant term up; each
    coefficient is an integer (read as a multiple of 1) or a base coordinate
    tuple. Passing ``truncate=t`` instead means ``f = X**t``.
    """
    if (modulus is None) == (truncate is None):
        raise ValueError("give exactly one of modulus / truncate")
    if truncate is not None:
        if truncate < 1:
            raise ValueError("truncation exponent must be >= 1")
        zero = tuple(0 for _ in range(width(base)))
        coeffs = (zero,) * truncate + (one_coords(base),)
        return QuotientPoly(base, coeffs, var, truncate)
    coeffs = tuple(_as_base_coords(base, c) for c in modulus)
    if len(coeffs) < 2:
        raise ValueError("modulus must have degree >= 1")
    if coeffs[-1] != one_coords(base):
        raise ValueError("modulus must be monic")
    if all(not any(c) for c in coeffs[:-1]):
        return QuotientPoly(base, coeffs, var, len(coeffs) - 1)
    return QuotientPoly(base, coeffs, var, None)


def _as_base_coords(base, c):
    if isinstance(c, (int, np.integer)):
        return embed_int(base, int(c))
    c = tuple(int(v) for v in c)
    if len(c) != width(base):
        raise ValueError(f"coefficient {c} has the wrong width for the base ring")
    return tuple(v % m for v, m in zip(c, moduli(base)))


@lru_cache(maxsize=None)
def width(p):
    if isinstance(p, ZMod):
        return 1
    if isinstance(p, QuotientPoly):
        return width(p.base) * p.degree
    return sum(width(f) for f in p.factors)


@lru_cache(maxsize=None)
def moduli(p):
    if isinstance(p, ZMod):
        return (p.n,)
    if isinstance(p, QuotientPoly):
        return moduli(p.base) * p.degree
    return tuple(m for f in p.factors for m in moduli(f))


@lru_cache(maxsize=None)
def _moduli_array(p):
    return np.array(moduli(p), dtype=np.int64)


def presentation_size(p):
    return math.prod(moduli(p))


@lru_cache(maxsize=None)
def one_coords(p):
    if isinstance(p, ZMod):
        return (1,)
    if isinstance(p, QuotientPoly):
        zero = (0,) * width(p.base)
        return one_coords(p.base) + zero * (p.degree - 1)
    return tuple(c for f in p.factors for c in one_coords(f))


def embed_int(p, c):
    return tuple((c * v) % m for v, m in zip(one_coords(p), moduli(p)))


@lru_cache(maxsize=None)
def monomial_names(p):
    """Names of the canonical basis monomials, in coordinate order."""
    if isinstance(p, ZMod):
        return ("1",)
    if isinstance(p, QuotientPoly):
        names = []
        for j in range(p.degree):
            for m in monomial_names(p.base):
                if j == 0:
                    names.append(m)
                else:
                    power = p.var if j == 1 else f"{p.var}^{j}"
                    names.append(power if m == "1" else f"{m}*{power}")
        return tuple(names)
    return tuple(f"[{k}]{m}" for k, f in enumerate(p.factors) for m in monomial_names(f))


def _add_coords(p, a, b):
    return (a + b) % _moduli_array(p)


def _neg_coords(p, a):
    return (-a) % _moduli_array(p)


def _mul_coords(p, a, b):
    """Multiply coordinate arrays (last axis = coordinates), broadcasting."""
    if isinstance(p, ZMod):
        return (a * b) % p.n
    if isinstance(p, Product):
        parts, start = [], 0
        for f in p.factors:
            w = width(f)
            parts.append(_mul_coords(f, a[..., start:start + w], b[..., start:start + w]))
            start += w
        lead = np.broadcast_shapes(*(q.shape[:-1] for q in parts))
        return np.concatenate([np.broadcast_to(q, lead + q.shape[-1:]) for q in parts], axis=-1)
    base, d, kb = p.base, p.degree, width(p.base)
    shape = np.broadcast_shapes(a.shape[:-1], b.shape[:-1])
    a = a.reshape(a.shape[:-1] + (d, kb))
    b = b.reshape(b.shape[:-1] + (d, kb))
    acc = [np.zeros(shape + (kb,), dtype=np.int64) for _ in range(2 * d - 1)]
    for i in range(d):
        for j in range(d):
            if p.truncation is not None and i + j >= d:
                continue
            acc[i + j] = _add_coords(base, acc[i + j], _mul_coords(base, a[..., i, :], b[..., j, :]))
    if p.truncation is None:
        tail = [np.array(c, dtype=np.int64) for c in p.modulus[:-1]]
        for m in range(2 * d - 2, d - 1, -1):
            top = acc[m]
            for j, coeff in enumerate(tail):
                if not coeff.any():
                    continue
                acc[m - d + j] = _add_coords(
                    base, acc[m - d + j], _neg_coords(base, _mul_coords(base, top, coeff))
                )
    return np.concatenate(acc[:d], axis=-1)


# ---------------------------------------------------------------------------
# rings


class FiniteRing:
    """Common surface of presented rings and table (quotient) rings.

    Elements are integer indices ``0 .. size-1``; index 0 is the zero element
    and index order is the lexicographic order of coordinate vectors.
    """

    size: int
    one: int

    def __init__(self):
        self._unit_mask = None
        self._unit_memo = {}

    # --- to be provided by subclasses
    def add(self, a, b):
        raise NotImplementedError

    def neg(self, a):
        raise NotImplementedError

    def mul(self, a, b):
        raise NotImplementedError

    def coords(self, i):
        raise NotImplementedError

    def from_coords(self, coords):
        raise NotImplementedError

    def from_int(self, c):
        raise NotImplementedError

    def additive_generators(self):
        raise NotImplementedError

    def format_index(self, i):
        raise NotImplementedError

    # --- shared
    @property
    def zero(self):
        return 0

    def sub(self, a, b):
        return self.add(a, self.neg(b))

    def all_indices(self):
        return np.arange(self.size, dtype=np.int64)

    def power(self, a, k):
        result, base = self.one, int(a)
        while k:
            if k & 1:
                result = int(self.mul(result, base))
            base = int(self.mul(base, base))
            k >>= 1
        return result

    def element(self, value):
        """Coerce an int (multiple of 1), coordinate tuple, literal string or element."""
        if isinstance(value, RingElement):
            if value.ring is not self:
                raise MixedRingsError("element belongs to a different ring")
            return value
        if isinstance(value, (int, np.integer)):
            return RingElement(self, self.from_int(int(value)))
        if isinstance(value, str):
            from .literals import parse_element

            return RingElement(self, parse_element(self, value))
        return RingElement(self, self.from_coords(tuple(value)))

    def __getitem__(self, index):
        return RingElement(self, int(index))

    def unit_mask(self):
        """Boolean mask of units, computed by an exhaustive product scan."""
        if self._unit_mask is None:
            if self.size > config.FULL_UNIT_SCAN_LIMIT:
                raise SizeExceededError(
                    f"full unit scan refused for a ring of {self.size} elements; use is_unit"
                )
            allidx = self.all_indices()
            mask = np.zeros(self.size, dtype=bool)
            step = max(1, 2_000_000 // self.size)
            for start in range(0, self.size, step):
                chunk = allidx[start:start + step]
                prods = self.mul(chunk[:, None], allidx[None, :])
                mask[start:start + step] = (prods == self.one).any(axis=1)
            self._unit_mask = mask
        return self._unit_mask

    def is_unit(self, a):
        a = int(a)
        if self._unit_mask is not None:
            return bool(self._unit_mask[a])
        if self.size <= config.FULL_UNIT_SCAN_LIMIT:
            return bool(self.unit_mask()[a])
        hit = self._unit_memo.get(a)
        if hit is None:
            hit = bool((self.mul(a, self.all_indices()) == self.one).any())
            self._unit_memo[a] = hit
        return hit

    def units_of(self, indices):
        indices = np.asarray(indices, dtype=np.int64)
        if self.size <= config.FULL_UNIT_SCAN_LIMIT:
            return self.unit_mask()[indices]
        return np.array([self.is_unit(i) for i in indices], dtype=bool)

    def inverse(self, a):
        hits = np.flatnonzero(self.mul(int(a), self.all_indices()) == self.one)
        return int(hits[0]) if hits.size else None

    def annihilator(self, a):
        return np.flatnonzero(self.mul(int(a), self.all_indices()) == 0)


class PresentedRing(FiniteRing):
    """A ring given by a :class:`ZMod` / :class:`QuotientPoly` / :class:`Product` tree."""

    def __init__(self, presentation, max_size=None):
        super().__init__()
        size = presentation_size(presentation)
        limit = config.max_ring_size() if max_size is None else max_size
        if size > limit:
            raise SizeExceededError(f"ring has {size} elements, bound is {limit}")
        self.presentation = presentation
        self.size = size
        self.moduli = _moduli_array(presentation)
        w = np.ones(len(self.moduli), dtype=np.int64)
        for k in range(len(w) - 2, -1, -1):
            w[k] = w[k + 1] * self.moduli[k + 1]
        self.weights = w
        # first coordinate least significant: colexicographic rank
        self.colex_weights = np.concatenate(([1], np.cumprod(self.moduli[:-1]))).astype(np.int64)
        self.one = self.from_coords(one_coords(presentation))
        self._mul_table = None
        self._add_table = None
        if size <= config.TABLE_LIMIT:
            allidx = self.all_indices()
            self._mul_table = self._mul_direct(allidx[:, None], allidx[None, :]).astype(np.int32)
            self._add_table = self._add_direct(allidx[:, None], allidx[None, :]).astype(np.int32)

    def __repr__(self):
        return f"PresentedRing({self.presentation!r})"

    def decode(self, idx):
        idx = np.asarray(idx, dtype=np.int64)
        return (idx[..., None] // self.weights) % self.moduli

    def encode(self, coords):
        return (np.asarray(coords, dtype=np.int64) * self.weights).sum(axis=-1)

    def _add_direct(self, a, b):
        return self.encode(_add_coords(self.presentation, self.decode(a), self.decode(b)))

    def _mul_direct(self, a, b):
        return self.encode(_mul_coords(self.presentation, self.decode(a), self.decode(b)))

    def colex_key(self, idx):
        return (self.decode(idx) * self.colex_weights).sum(axis=-1)

    def add(self, a, b):
        if self._add_table is not None:
            return self._add_table[a, b].astype(np.int64)
        return self._add_direct(a, b)

    def neg(self, a):
        return self.encode(_neg_coords(self.presentation, self.decode(a)))

    def mul(self, a, b):
        if self._mul_table is not None:
            return self._mul_table[a, b].astype(np.int64)
        return self._mul_direct(a, b)

    def coords(self, i):
        return tuple(int(c) for c in self.decode(int(i)))

    def from_coords(self, coords):
        coords = tuple(int(c) for c in coords)
        if len(coords) != len(self.moduli):
            raise ValueError(f"expected {len(self.moduli)} coordinates, got {len(coords)}")
        return int(self.encode(np.array(coords) % self.moduli))

    def from_int(self, c):
        return self.from_coords(embed_int(self.presentation, c))

    def additive_generators(self):
        return [int(w) for w in self.weights]

    def format_index(self, i):
        from .literals import format_coords

        return format_coords(self.presentation, self.coords(i))


class TableRing(FiniteRing):
    """A ring realised by explicit tables over canonical representatives.

    Used for quotients: ``reps`` are the lexicographically least members of the
    cosets in ``parent`` (ascending) and ``proj`` maps every parent index to the
    index of its coset.
    """

    def __init__(self, parent, reps, proj):
        super().__init__()
        m = len(reps)
        if m > 3 * config.TABLE_LIMIT:
            raise SizeExceededError(f"quotient with {m} elements exceeds the table bound")
        self.parent = parent
        self.reps = np.asarray(reps, dtype=np.int64)
        self.proj = np.asarray(proj, dtype=np.int64)
        self.size = m
        r = self.reps
        self._mul_table = self.proj[parent.mul(r[:, None], r[None, :])].astype(np.int32)
        self._add_table = self.proj[parent.add(r[:, None], r[None, :])].astype(np.int32)
        self._neg = self.proj[parent.neg(r)]
        self.one = int(self.proj[parent.one])

    def __repr__(self):
        return f"TableRing(size={self.size}, parent={self.parent!r})"

    def colex_key(self, idx):
        return self.parent.colex_key(self.reps[np.asarray(idx, dtype=np.int64)])

    def add(self, a, b):
        return self._add_table[a, b].astype(np.int64)

    def neg(self, a):
        return self._neg[a]

    def mul(self, a, b):
        return self._mul_table[a, b].astype(np.int64)

    def coords(self, i):
        return self.parent.coords(self.reps[int(i)])

    def from_coords(self, coords):
        return int(self.proj[self.parent.from_coords(coords)])

    def from_int(self, c):
        return int(self.proj[self.parent.from_int(c)])

    def additive_generators(self):
        gens = {int(self.proj[g]) for g in self.parent.additive_generators()}
        gens.discard(0)
        return sorted(gens)

    def format_index(self, i):
        return self.parent.format_index(self.reps[int(i)])


# ---------------------------------------------------------------------------
# elements


@dataclass(frozen=True, eq=False)
class RingElement:
    ring: FiniteRing
    index: int

    def _other(self, other):
        if isinstance(other, RingElement):
            if other.ring is not self.ring:
                raise MixedRingsError("operands come from different rings")
            return other.index
        if isinstance(other, (int, np.integer)):
            return self.ring.from_int(int(other))
        return NotImplemented

    def __eq__(self, other):
        if isinstance(other, RingElement):
            return other.ring is self.ring and other.index == self.index
        if isinstance(other, (int, np.integer)):
            return self.index == self.ring.from_int(int(other))
        return NotImplemented

    def __hash__(self):
        return hash((id(self.ring), self.index))

    def __lt__(self, other):
        return self.index < self._other(other)

    def __add__(self, other):
        o = self._other(other)
        return RingElement(self.ring, int(self.ring.add(self.index, o)))

    __radd__ = __add__

    def __sub__(self, other):
        o = self._other(other)
        return RingElement(self.ring, int(self.ring.sub(self.index, o)))

    def __rsub__(self, other):
        return RingElement(self.ring, self._other(other)) - self

    def __mul__(self, other):
        o = self._other(other)
        return RingElement(self.ring, int(self.ring.mul(self.index, o)))

    __rmul__ = __mul__

    def __neg__(self):
        return RingElement(self.ring, int(self.ring.neg(self.index)))

    def __pow__(self, k):
        return RingElement(self.ring, self.ring.power(self.index, int(k)))

    @property
    def coords(self):
        return self.ring.coords(self.index)

    def is_unit(self):
        return self.ring.is_unit(self.index)

    def __repr__(self):
        return self.ring.format_index(self.index)


def element_arithmetic(op, a, b=None):
    """Apply ``ADD``, ``SUB``, ``MUL`` or ``NEG`` to ring elements."""
    op = op.upper()
    if op == "NEG":
        return -a
    if b is None:
        raise ValueError(f"{op} needs two operands")
    if not isinstance(b, RingElement) or b.ring is not a.ring:
        raise MixedRingsError("operands come from different rings")
    if op == "ADD":
        return a + b
    if op == "SUB":
        return a - b
    if op == "MUL":
        return a * b
    raise ValueError(f"unknown operation {op!r}")


def is_unit(a):
    return a.ring.is_unit(a.index)


@dataclass(frozen=True)
class ElementInfo:
    idempotent: bool
    nilpotent: bool
    regular: bool
    annihilator: frozenset


def element_classify(a):
    R, i = a.ring, a.index
    sq = int(R.mul(i, i))
    # x^(2^k) = 0 for 2^k >= |R| iff x is nilpotent
    x = i
    for _ in range(math.ceil(math.log2(R.size)) + 1):
        if x == 0:
            break
        x = int(R.mul(x, x))
    ann = R.annihilator(i)
    return ElementInfo(
        idempotent=sq == i,
        nilpotent=x == 0,
        regular=ann.size == 1,
        annihilator=frozenset(RingElement(R, int(j)) for j in ann),
    )


def enumerate_elements(R):
    if R.size > config.max_ring_size():
        raise SizeExceededError(f"ring has {R.size} elements")
    return [RingElement(R, i) for i in range(R.size)]


def zmod(n):
    return PresentedRing(ZMod(n))


def product(*factors):
    return Product(tuple(factors))
