"""Ring-spec files: a JSON description of a graded ring with named ideals.

Example::

    {
      "name": "z18i",
      "ring": {"quotient_poly": {"base": {"zmod": 18}, "modulus": [1, 0, 1], "var": "i"}},
      "grading": {"group": "cyclic:2", "degrees": {"i": 1}},
      "ideals": {"q2": ["9"]},
      "phis": ["empty", "zero"]
    }

``ring`` is one of ``{"zmod": n}``, ``{"quotient_poly": {...}}`` (with either
``modulus``, coefficients from the constant term up, or ``truncate: t`` for
``X^t``) and ``{"product": [ring, ...]}``.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from pathlib import Path

from .errors import GrilError, SpecParseError, SpecValidationError
from .grading import GradingGroup, graded_ring, validate_grading
from .ideals import generate_graded_ideal
from .phi import parse_phi
from .rings import Product, QuotientPoly, ZMod, quotient_poly

_TOP_KEYS = {"name", "ring", "grading", "ideals", "phis", "provenance", "notes"}


@dataclass
class RingSpec:
    name: str
    ring: dict
    grading: dict = field(default_factory=lambda: {"group": "trivial", "degrees": {}})
    ideals: dict = field(default_factory=dict)
    phis: list = field(default_factory=list)
    provenance: str = "SYNTHETIC"
    notes: str = ""

    def presentation(self):
        return presentation_from_dict(self.ring)

    def group(self):
        return GradingGroup.parse(self.grading.get("group", "trivial"))

    def to_dict(self):
        out = {"name": self.name, "ring": self.ring, "grading": self.grading}
        if self.ideals:
            out["ideals"] = self.ideals
        if self.phis:
            out["phis"] = self.phis
        if self.provenance != "SYNTHETIC":
            out["provenance"] = self.provenance
        if self.notes:
            out["notes"] = self.notes
        return out

    def build(self, validate=True, max_size=None):
        """The graded ring, its named ideals and φ maps.

        With ``validate`` the grading axioms are checked first and a failure
        raises :class:`SpecValidationError` carrying the violating pair.
        """
        degrees = self.grading.get("degrees") or None
        try:
            R = graded_ring(self.presentation(), self.group(), degrees, name=self.name, max_size=max_size)
        except (ValueError, KeyError) as exc:
            raise SpecValidationError(f"{self.name}: {exc}") from None
        if validate:
            verdict = validate_grading(R)
            if not verdict.passed:
                raise SpecValidationError(
                    f"{self.name}: grading axioms fail {verdict}", witness=verdict.witness_text()
                )
        ideals = {}
        for name, gens in self.ideals.items():
            try:
                ideals[name] = generate_graded_ideal(R, [R.element(g) for g in gens])
            except GrilError:
                raise
            except ValueError as exc:
                raise SpecValidationError(f"ideal {name!r}: {exc}") from None
        phis = [parse_phi(p) for p in self.phis]
        return R, ideals, phis


def presentation_from_dict(d, path="ring"):
    if not isinstance(d, dict) or len(d) != 1:
        raise SpecParseError(f"{path}: expected an object with exactly one of zmod, quotient_poly, product")
    (kind, body), = d.items()
    if kind == "zmod":
        if not isinstance(body, int) or isinstance(body, bool) or body < 2:
            raise SpecParseError(f"{path}.zmod: expected an integer >= 2")
        return ZMod(body)
    if kind == "product":
        if not isinstance(body, list) or len(body) < 2:
            raise SpecParseError(f"{path}.product: expected a list of at least two rings")
        return Product(tuple(presentation_from_dict(f, f"{path}.product[{k}]") for k, f in enumerate(body)))
    if kind == "quotient_poly":
        if not isinstance(body, dict):
            raise SpecParseError(f"{path}.quotient_poly: expected an object")
        unknown = set(body) - {"base", "modulus", "truncate", "var"}
        if unknown:
            raise SpecParseError(f"{path}.quotient_poly: unknown keys {sorted(unknown)}")
        if "base" not in body:
            raise SpecParseError(f"{path}.quotient_poly: missing base")
        base = presentation_from_dict(body["base"], f"{path}.quotient_poly.base")
        var = body.get("var", "X")
        try:
            if "truncate" in body and "modulus" not in body:
                return quotient_poly(base, truncate=body["truncate"], var=var)
            return quotient_poly(base, body.get("modulus"), var=var)
        except (TypeError, ValueError) as exc:
            raise SpecParseError(f"{path}.quotient_poly: {exc}") from None
    raise SpecParseError(f"{path}: unknown ring kind {kind!r}")


def presentation_to_dict(p):
    if isinstance(p, ZMod):
        return {"zmod": p.n}
    if isinstance(p, Product):
        return {"product": [presentation_to_dict(f) for f in p.factors]}
    body = {"base": presentation_to_dict(p.base)}
    if p.truncation is not None:
        body["truncate"] = p.truncation
    else:
        scalar = isinstance(p.base, ZMod)
        body["modulus"] = [c[0] if scalar else list(c) for c in p.modulus]
    body["var"] = p.var
    return {"quotient_poly": body}


def _normalise(data):
    unknown = set(data) - _TOP_KEYS
    if unknown:
        raise SpecParseError(f"unknown top-level keys {sorted(unknown)}")
    for key in ("name", "ring"):
        if key not in data:
            raise SpecParseError(f"missing required key {key!r}")
    if not isinstance(data["name"], str):
        raise SpecParseError("name: expected a string")
    # round-trip the presentation so equivalent inputs serialise identically
    ring = presentation_to_dict(presentation_from_dict(data["ring"]))
    grading = data.get("grading", {"group": "trivial"})
    if not isinstance(grading, dict) or set(grading) - {"group", "degrees"}:
        raise SpecParseError("grading: expected {group, degrees}")
    try:
        GradingGroup.parse(grading.get("group", "trivial"))
    except ValueError as exc:
        raise SpecParseError(f"grading.group: {exc}") from None
    degrees = grading.get("degrees", {})
    if not isinstance(degrees, (dict, list)):
        raise SpecParseError("grading.degrees: expected an object or a list")
    ideals = data.get("ideals", {})
    if not isinstance(ideals, dict) or not all(isinstance(v, list) for v in ideals.values()):
        raise SpecParseError("ideals: expected an object of generator lists")
    ideals = {k: [str(g) for g in v] for k, v in ideals.items()}
    phis = data.get("phis", [])
    if not isinstance(phis, list):
        raise SpecParseError("phis: expected a list")
    for p in phis:
        try:
            parse_phi(str(p))
        except ValueError as exc:
            raise SpecParseError(f"phis: {exc}") from None
    return RingSpec(
        name=data["name"],
        ring=ring,
        grading={"group": str(GradingGroup.parse(grading.get("group", "trivial"))), "degrees": degrees},
        ideals=ideals,
        phis=[str(p) for p in phis],
        provenance=data.get("provenance", "SYNTHETIC"),
        notes=data.get("notes", ""),
    )


def parse_ring_spec(source):
    """Parse a spec from a path or from JSON text."""
    if isinstance(source, Path) or (isinstance(source, str) and not source.lstrip().startswith("{")):
        try:
            text = Path(source).read_text(encoding="utf-8")
        except OSError as exc:
            raise SpecParseError(f"cannot read {source}: {exc.strerror}") from None
    else:
        text = source
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise SpecParseError(exc.msg, exc.lineno, exc.colno) from None
    if not isinstance(data, dict):
        raise SpecParseError("top level must be an object", 1, 1)
    return _normalise(data)


def serialize_ring_spec(spec):
    return json.dumps(spec.to_dict(), indent=2, ensure_ascii=False) + "\n"
