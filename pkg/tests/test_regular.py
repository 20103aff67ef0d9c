import pytest

from gril import principal_ideal, vnr_decomposition, vnr_suite, principal_to_idempotent
from gril.errors import NotVnrError
from gril.suite import load_catalog

import oracle
from conftest import ORACLE_RINGS, oracle_for


@pytest.mark.parametrize("name", ORACLE_RINGS)
def test_vnr_matches_oracle(rings, name):
    assert vnr_suite(rings[name]).is_vnr == oracle.is_vnr(oracle_for(name))


@pytest.mark.parametrize("name", ["z6", "z2x2x2", "z6i"])
def test_witnesses_are_regular(rings, name):
    R = rings[name]
    result = vnr_suite(R)
    mul = R.ring.mul
    for a, x in result.witness.items():
        assert int(mul(mul(a.index, a.index), x.index)) == a.index
        g = R.degree_of(a.index)
        assert R.component_mask(R.group.inverse(g))[x.index]


def test_catalog_vnr_fixtures():
    catalog = {fx.name: fx for fx in load_catalog()}
    for name in ("z6", "f9-c2", "z2x2x2", "ex3-z2x4"):
        R = catalog[name].ring
        assert vnr_suite(R).is_vnr
        for h in R.homogeneous:
            a = principal_to_idempotent(R, int(h))
            assert principal_ideal(R, a.index) == principal_ideal(R, int(h))
            Rx, J = vnr_decomposition(R, int(h))
            assert Rx.size * J.size == R.size


def test_non_vnr_rejected(rings):
    R = rings["z8"]
    result = vnr_suite(R)
    assert not result.is_vnr and str(result.failure) == "2"
    with pytest.raises(NotVnrError):
        principal_to_idempotent(R, 2)
