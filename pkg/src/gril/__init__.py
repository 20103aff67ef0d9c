"""Graded φ-1-absorbing prime ideals over finite commutative graded rings."""

from .classify import (
    LITERAL,
    PREDICATE_IDS,
    PROOF,
    Predicate,
    TripleZero,
    classify_ideal,
    find_triple_zeros,
    parse_predicate,
    theorem1_condition,
)
from .errors import GrilError
from .grading import (
    TRIVIAL,
    GradedRing,
    GradingGroup,
    bounded_integer,
    cyclic,
    graded_ring,
    validate_grading,
)
from .ideals import (
    GradedIdeal,
    colon,
    enumerate_graded_ideals,
    generate_graded_ideal,
    ideal_intersection,
    ideal_power,
    ideal_product,
    ideal_sum,
    localize,
    principal_ideal,
    product_construction,
    quotient_construction,
)
from .phi import PhiMap, apply_phi, parse_phi, phi_leq
from .regular import principal_to_idempotent, vnr_decomposition, vnr_suite
from .rings import Product, RingElement, ZMod, quotient_poly
from .spec_io import RingSpec, parse_ring_spec, serialize_ring_spec
from .verdict import Outcome, Verdict

__version__ = "0.1.0"

__all__ = [
    "GradedIdeal",
    "GradedRing",
    "GradingGroup",
    "GrilError",
    "LITERAL",
    "Outcome",
    "PREDICATE_IDS",
    "PROOF",
    "PhiMap",
    "Predicate",
    "Product",
    "RingElement",
    "RingSpec",
    "TRIVIAL",
    "TripleZero",
    "Verdict",
    "ZMod",
    "apply_phi",
    "bounded_integer",
    "classify_ideal",
    "colon",
    "cyclic",
    "enumerate_graded_ideals",
    "find_triple_zeros",
    "generate_graded_ideal",
    "graded_ring",
    "ideal_intersection",
    "ideal_power",
    "ideal_product",
    "ideal_sum",
    "localize",
    "parse_phi",
    "parse_predicate",
    "parse_ring_spec",
    "phi_leq",
    "principal_ideal",
    "principal_to_idempotent",
    "product_construction",
    "quotient_construction",
    "quotient_poly",
    "serialize_ring_spec",
    "theorem1_condition",
    "validate_grading",
    "vnr_decomposition",
    "vnr_suite",
]
