"""Graded von Neumann regular rings: witnesses, idempotent generators, splittings."""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .errors import NotVnrError
from .ideals import (
    ideal_intersection,
    ideal_product,
    ideal_sum,
    principal_ideal,
    unit_ideal,
)
from .rings import RingElement


@dataclass(frozen=True)
class VnrResult:
    is_vnr: bool
    witness: dict = field(default_factory=dict)
    failure: RingElement | None = None


def _index(x):
    return x.index if isinstance(x, RingElement) else int(x)


def vnr_suite(R):
    """For every homogeneous ``a`` of degree ``g`` find ``x ∈ R_{g^-1}`` with ``a = a^2 x``."""
    cached = R._cache.get("vnr")
    if cached is not None:
        return cached
    ring = R.ring
    witness = {}
    failure = None
    for g in R.degrees:
        inv = R.group.inverse(g)
        pool = R.witness_sort(R.component(inv))
        for a in R.witness_sort(R.component(g)):
            a = int(a)
            if a in witness or (a == 0 and 0 in witness):
                continue
            sq = ring.mul(a, a)
            hits = np.flatnonzero(ring.mul(sq, pool) == a)
            if hits.size == 0:
                failure = failure if failure is not None else RingElement(ring, a)
                continue
            witness[a] = int(pool[hits[0]])
    result = VnrResult(
        failure is None,
        {RingElement(ring, a): RingElement(ring, x) for a, x in sorted(witness.items())},
        failure,
    )
    R._cache["vnr"] = result
    return result


def _require_vnr(R):
    result = vnr_suite(R)
    if not result.is_vnr:
        raise NotVnrError(f"{result.failure!r} has no regular witness")
    return result


def principal_to_idempotent(R, x):
    """An idempotent ``a ∈ R_e`` with ``Rx = Ra`` (``a = xy`` for the witness ``y``)."""
    result = _require_vnr(R)
    ring = R.ring
    xi = _index(x)
    if not R.is_homogeneous(xi):
        raise ValueError("x must be homogeneous")
    y = result.witness[RingElement(ring, xi)]
    a = int(ring.mul(xi, y.index))
    assert int(ring.mul(a, a)) == a
    assert R.component_mask(R.group.identity)[a]
    assert principal_ideal(R, xi) == principal_ideal(R, a)
    return RingElement(ring, a)


def vnr_decomposition(R, x):
    """``(Rx, J)`` with ``J = R(1 - a)`` idempotent, ``Rx + J = R`` and ``Rx ∩ J = 0``."""
    a = principal_to_idempotent(R, x)
    ring = R.ring
    Rx = principal_ideal(R, _index(x))
    J = principal_ideal(R, int(ring.sub(ring.one, a.index)))
    assert ideal_product(J, J) == J
    assert ideal_sum(Rx, J) == unit_ideal(R)
    assert ideal_intersection(Rx, J).is_zero()
    return Rx, J
