import pytest

from gril import apply_phi, enumerate_graded_ideals, localize, parse_phi, phi_leq, principal_ideal, quotient_construction
from gril.errors import AmbientMismatchError
from gril.phi import induced_localized, induced_quotient

import oracle
from conftest import ORACLE_RINGS, ideal_coords, oracle_for

PHIS = ("empty", "zero", "identity", "power:2", "power:3", "omega")


@pytest.mark.parametrize("name", ORACLE_RINGS)
@pytest.mark.parametrize("phi", PHIS)
def test_values_match_oracle(rings, name, phi):
    R, O = rings[name], oracle_for(name)
    f = parse_phi(phi)
    for I in enumerate_graded_ideals(R):
        ours = apply_phi(f, I)
        expected = oracle.phi_value(O, phi, ideal_coords(I))
        if expected is None:
            assert ours is None
        else:
            assert ideal_coords(ours) == expected
            assert ours <= I


def test_parse_round_trip():
    for text in PHIS:
        assert str(parse_phi(text)) == text
    assert parse_phi("power:1") == parse_phi("identity")
    assert parse_phi(" Omega ") == parse_phi("omega")
    for bad in ("power:x", "square", "power"):
        with pytest.raises(ValueError):
            parse_phi(bad)


@pytest.mark.parametrize("name", ["z8", "z12", "z4e-c2", "z2e3-b3"])
def test_standard_chain_is_ordered(rings, name):
    R = rings[name]
    chain = ["empty", "zero", "omega", "power:3", "power:2", "identity"]
    for lo, hi in zip(chain, chain[1:]):
        assert phi_leq(parse_phi(lo), parse_phi(hi), R).passed


def test_phi_leq_reports_first_offending_ideal(rings):
    R = rings["z8"]
    v = phi_leq(parse_phi("power:2"), parse_phi("power:3"), R)
    assert not v.passed
    (label, I), = v.witness
    assert label == "I" and I == principal_ideal(R, "2")
    assert not phi_leq(parse_phi("zero"), parse_phi("empty"), R).passed


def test_induced_quotient_map(rings):
    R = rings["z12"]
    J = principal_ideal(R, "6")
    q = quotient_construction(R, J)
    f = induced_quotient(parse_phi("zero"), q)
    for Q in enumerate_graded_ideals(q.ring):
        assert apply_phi(f, Q).is_zero()
    g = induced_quotient(parse_phi("power:2"), q)
    I = principal_ideal(R, "2")
    # (I^2 + J)/J = <4, 6>/<6> = <2>/<6>
    assert q.lift(apply_phi(g, q.project(I))) == principal_ideal(R, "2")
    assert apply_phi(induced_quotient(parse_phi("empty"), q), q.project(I)) is None
    with pytest.raises(AmbientMismatchError):
        apply_phi(f, I)


def test_induced_localized_map(rings):
    R = rings["z12"]
    loc = localize(R, ["1", "3", "9"])
    f = induced_localized(parse_phi("power:2"), loc)
    # S^-1 Z12 = Z4 and phi_S(<2>) = <4> = 0 there
    assert loc.ring.size == 4
    image = loc.extend(principal_ideal(R, "2"))
    assert image.size == 2
    assert apply_phi(f, image).is_zero()
