"""The φ family of ideal maps and the maps induced on constructed rings.

``apply_phi`` returns a :class:`GradedIdeal` contained in its argument, or
``None`` for the empty set (the value of ``φ_∅``).
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import AmbientMismatchError
from .ideals import (
    enumerate_graded_ideals,
    ideal_intersection,
    ideal_product,
    ideal_sum,
    product_ideal,
    zero_ideal,
)
from .verdict import Verdict

EMPTY = "empty"
ZERO = "zero"
IDENTITY = "identity"
POWER = "power"
OMEGA = "omega"
INDUCED_QUOTIENT = "quotient"
INDUCED_LOCALIZED = "localized"
PRODUCT_THETA = "theta"

_BASE_KINDS = (EMPTY, ZERO, IDENTITY, POWER, OMEGA)


@dataclass(frozen=True, eq=False)
class PhiMap:
    kind: str
    n: int = 0
    base: PhiMap | None = None
    right: PhiMap | None = None
    construction: object = None

    def __post_init__(self):
        if self.kind == POWER and self.n < 2:
            raise ValueError("power maps need n >= 2")

    def __eq__(self, other):
        if not isinstance(other, PhiMap):
            return NotImplemented
        return (
            self.kind == other.kind
            and self.n == other.n
            and self.base == other.base
            and self.right == other.right
            and self.construction is other.construction
        )

    def __hash__(self):
        return hash((self.kind, self.n, self.base, self.right, id(self.construction)))

    @property
    def ambient(self):
        """Graded ring the map is defined on, or None for the base family."""
        return None if self.construction is None else self.construction.ring

    def __str__(self):
        if self.kind == POWER:
            return f"power:{self.n}"
        if self.kind == INDUCED_QUOTIENT:
            return f"quotient({self.base})"
        if self.kind == INDUCED_LOCALIZED:
            return f"localized({self.base})"
        if self.kind == PRODUCT_THETA:
            return f"theta({self.base}, {self.right})"
        return self.kind

    __repr__ = __str__


PHI_EMPTY = PhiMap(EMPTY)
PHI_ZERO = PhiMap(ZERO)
PHI_IDENTITY = PhiMap(IDENTITY)
PHI_OMEGA = PhiMap(OMEGA)


def phi_power(n):
    return PhiMap(POWER, n)


PHI_2 = phi_power(2)


def parse_phi(text):
    """Parse ``empty|zero|identity|power:<n>|omega``."""
    t = text.strip().lower()
    if t in (EMPTY, ZERO, IDENTITY, OMEGA):
        return PhiMap(t)
    if t.startswith("power:"):
        try:
            n = int(t.split(":", 1)[1])
        except ValueError:
            raise ValueError(f"bad power exponent in {text!r}") from None
        if n == 1:
            return PHI_IDENTITY
        return phi_power(n)
    raise ValueError(f"unknown phi {text!r}; use empty, zero, identity, power:<n> or omega")


def induced_quotient(base, quotient):
    """``φ_J`` on ``R/J``: ``φ_J(I/J) = (φ(I) + J)/J``."""
    return PhiMap(INDUCED_QUOTIENT, base=base, construction=quotient)


def induced_localized(base, localization):
    """``φ_S`` on ``S^{-1}R``, evaluated through the contraction of the argument."""
    return PhiMap(INDUCED_LOCALIZED, base=base, construction=localization)


def product_theta(left, right, product_ring):
    """``θ(I x J) = φ(I) x ψ(J)`` on a product ring."""
    return PhiMap(PRODUCT_THETA, base=left, right=right, construction=_ProductHolder(product_ring))


@dataclass(frozen=True)
class _ProductHolder:
    ring: object


def ideal_powers(I):
    """``[I, I^2, ..., I^N]`` where ``I^{N+1} = I^N``; memoised on the ring."""
    memo = I.R._cache.setdefault("powers", {})
    powers = memo.get(I.key)
    if powers is None:
        powers = [I]
        while True:
            nxt = ideal_product(powers[-1], I)
            if nxt == powers[-1] or len(powers) > I.size:
                break
            powers.append(nxt)
        memo[I.key] = powers
    return powers


def power_stabilization_index(I):
    """Least ``N >= 1`` with ``I^{N+1} = I^N``."""
    return len(ideal_powers(I))


def ideal_nth_power(I, n):
    powers = ideal_powers(I)
    return powers[min(n, len(powers)) - 1]


def _raw(phi, I):
    kind = phi.kind
    if kind == EMPTY:
        return None
    if kind == ZERO:
        return zero_ideal(I.R)
    if kind == IDENTITY:
        return I
    if kind == POWER:
        return ideal_nth_power(I, phi.n)
    if kind == OMEGA:
        return ideal_powers(I)[-1]
    if kind == INDUCED_QUOTIENT:
        q = phi.construction
        value = apply_phi(phi.base, q.lift(I))
        return None if value is None else q.project(ideal_sum(value, q.kernel))
    if kind == INDUCED_LOCALIZED:
        loc = phi.construction
        value = apply_phi(phi.base, loc.quotient.lift(I))
        return None if value is None else loc.extend(value)
    if kind == PRODUCT_THETA:
        P = phi.construction.ring
        left, right = P.split_ideal(I)
        a = apply_phi(phi.base, left)
        b = apply_phi(phi.right, right)
        if a is None or b is None:
            return None
        return product_ideal(P, a, b)
    raise ValueError(f"unknown phi kind {kind!r}")


def apply_phi(phi, I):
    """``φ(I) ∩ I``, or None for the empty set."""
    ambient = phi.ambient
    if ambient is not None and I.R is not ambient:
        raise AmbientMismatchError(f"{phi} is defined on a different ring")
    value = _raw(phi, I)
    if value is None:
        return None
    if value <= I:
        return value
    return ideal_intersection(value, I)


def phi_contains(outer, inner):
    """Set containment where None stands for the empty set."""
    if inner is None:
        return True
    if outer is None:
        return False
    return bool(inner <= outer)


def phi_leq(phi, psi, R):
    """PASS iff ``φ(I) ⊆ ψ(I)`` for every graded ideal ``I`` of ``R``."""
    for I in enumerate_graded_ideals(R):
        if not phi_contains(apply_phi(psi, I), apply_phi(phi, I)):
            return Verdict.fail(("I", I), notes=f"{phi}(I) is not contained in {psi}(I)")
    return Verdict.ok()
