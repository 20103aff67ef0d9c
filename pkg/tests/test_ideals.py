import pytest
from hypothesis import given, settings, strategies as st

from gril import (
    ZMod,
    colon,
    enumerate_graded_ideals,
    generate_graded_ideal,
    graded_ring,
    ideal_intersection,
    ideal_power,
    ideal_product,
    ideal_sum,
    localize,
    principal_ideal,
    product_construction,
    quotient_construction,
    validate_grading,
)
from gril.errors import (
    BadMultiplicativeSetError,
    GroupMismatchError,
    ImproperIdealError,
    MixedRingsError,
    NonHomogeneousGeneratorError,
)
from gril.ideals import (
    check_localization,
    graded_spectrum_tools,
    multiplicative_sets,
    product_ideal,
    subring_maximal_ideals,
    unit_ideal,
    zero_ideal,
)

import oracle
from conftest import ORACLE_RINGS, coords, ideal_coords, oracle_for


@pytest.mark.parametrize("name", ORACLE_RINGS)
def test_enumeration_matches_oracle(rings, name):
    R, O = rings[name], oracle_for(name)
    ours = enumerate_graded_ideals(R)
    assert {ideal_coords(I) for I in ours} == oracle.graded_ideals(O)
    assert len(ours) == len(set(ours))
    sizes = [I.size for I in ours]
    assert sizes == sorted(sizes)


def test_frozen_counts(rings):
    # Z12 has one ideal per divisor of 12
    assert len(enumerate_graded_ideals(rings["z12"])) == 6
    # Z8 is a chain
    assert [I.size for I in enumerate_graded_ideals(rings["z8"])] == [1, 2, 4, 8]


def test_nine_in_gaussian_z18(rings):
    R = rings["z18i"]
    I = principal_ideal(R, "9")
    assert sorted(str(x) for x in I.as_elements()) == ["0", "9", "9 + 9*i", "9*i"]
    assert "9*i" in I and "3" not in I
    assert I.is_proper() and not I.is_zero()


def test_non_homogeneous_generator_rejected(rings):
    with pytest.raises(NonHomogeneousGeneratorError):
        generate_graded_ideal(rings["z18i"], ["1 + i"])


def test_mixed_rings_rejected(rings):
    with pytest.raises(MixedRingsError):
        ideal_sum(zero_ideal(rings["z6"]), zero_ideal(rings["z8"]))


@pytest.mark.parametrize("name", ["z12", "z6i", "z4e-c2", "z2e3-b3", "z2x2x2"])
@settings(max_examples=25, deadline=None)
@given(data=st.data())
def test_ideal_algebra_matches_oracle(rings, name, data):
    R, O = rings[name], oracle_for(name)
    ideals = enumerate_graded_ideals(R)
    I = ideals[data.draw(st.integers(0, len(ideals) - 1))]
    J = ideals[data.draw(st.integers(0, len(ideals) - 1))]
    n = data.draw(st.integers(1, 4))
    oi, oj = ideal_coords(I), ideal_coords(J)
    assert ideal_coords(ideal_sum(I, J)) == oracle.ideal(O, list(oi | oj))
    assert ideal_coords(ideal_product(I, J)) == oracle.ideal_product(O, oi, oj)
    assert ideal_coords(ideal_intersection(I, J)) == oi & oj
    assert ideal_coords(ideal_power(I, n)) == oracle.ideal_power(O, oi, n)
    assert (I <= J) == (oi <= oj)


@pytest.mark.parametrize("name", ["z12", "z6i", "z4e-c2"])
def test_colon_matches_brute_force(rings, name):
    R, O = rings[name], oracle_for(name)
    for I in enumerate_graded_ideals(R):
        oi = ideal_coords(I)
        for x in R.homogeneous:
            cx = coords(R, x)
            expected = {r for r in O.elements if O.mul(r, cx) in oi}
            assert {coords(R, y.index) for y in colon(I, int(x))} == expected
            for g in R.group.labels:
                restricted = expected & O.components.get(g, {O.zero})
                assert {coords(R, y.index) for y in colon(I, int(x), restrict_to=g)} == restricted


def test_quotient_round_trip(rings):
    R = rings["z18i"]
    J = principal_ideal(R, "9")
    q = quotient_construction(R, J)
    assert q.ring.size == R.size // J.size
    assert validate_grading(q.ring).passed
    for I in enumerate_graded_ideals(R)[:20]:
        back = q.lift(q.project(I))
        assert back == ideal_sum(I, J)
    lifted = {q.lift(Q) for Q in enumerate_graded_ideals(q.ring)}
    assert lifted == {I for I in enumerate_graded_ideals(R) if J <= I}


def test_quotient_by_unit_ideal_rejected(rings):
    with pytest.raises(ImproperIdealError):
        quotient_construction(rings["z6"], unit_ideal(rings["z6"]))


@pytest.mark.parametrize("name", ["z6", "z12", "z4e-c2", "z6i", "z2x2x2"])
def test_localization_matches_formal_fractions(rings, name):
    R = rings[name]
    for S in multiplicative_sets(R):
        assert check_localization(localize(R, S)) is None


def test_localization_of_z6_at_powers_of_two(rings):
    R = rings["z6"]
    loc = localize(R, ["1", "2", "4"])
    assert loc.ring.size == 3
    assert sorted(int(i) for i in loc.kernel.elements) == [0, 3]


def test_bad_multiplicative_sets(rings):
    R = rings["z6"]
    with pytest.raises(BadMultiplicativeSetError):
        localize(R, ["1", "2"])
    with pytest.raises(BadMultiplicativeSetError):
        localize(R, ["2", "4"])
    with pytest.raises(BadMultiplicativeSetError):
        localize(R, ["1", "0"])
    with pytest.raises(BadMultiplicativeSetError):
        localize(rings["z6i"], ["1", "1 + i"])


def test_product_construction(rings):
    A = graded_ring(ZMod(2), name="z2")
    B = graded_ring(ZMod(3), name="z3")
    P = product_construction(A, B)
    assert P.size == 6
    ideals = enumerate_graded_ideals(P)
    assert len(ideals) == 4
    for L in ideals:
        I, J = P.split_ideal(L)
        assert product_ideal(P, I, J) == L
    with pytest.raises(GroupMismatchError):
        product_construction(A, rings["z4e-c2"])


def test_graded_maximal_ideals(rings):
    info = graded_spectrum_tools(rings["z18i"])
    assert not info.is_graded_local
    assert sorted(I.size for I in info.graded_maximal) == [36, 81]
    local = graded_spectrum_tools(rings["z8"])
    assert local.is_graded_local and local.unique_maximal.size == 4


def test_subring_maximal_ideals(rings):
    R = rings["z6i"]
    maxes = subring_maximal_ideals(R)
    assert sorted(int(m.sum()) for m in maxes) == [2, 3]
    assert all(not (m & ~R.component_mask(0)).any() for m in maxes)
