import json
from importlib.resources import files

import pytest
from hypothesis import given, strategies as st

from gril import parse_ring_spec, serialize_ring_spec
from gril.errors import SpecParseError, SpecValidationError
from gril.spec_io import presentation_from_dict, presentation_to_dict

CATALOG = sorted(p.name for p in files("gril.suite").joinpath("catalog").iterdir() if p.name.endswith(".json"))


@pytest.mark.parametrize("filename", CATALOG)
def test_catalog_round_trip(filename):
    text = files("gril.suite").joinpath("catalog", filename).read_text(encoding="utf-8")
    spec = parse_ring_spec(text)
    assert spec.name == filename[:-5]
    again = parse_ring_spec(serialize_ring_spec(spec))
    assert again == spec
    assert serialize_ring_spec(again) == serialize_ring_spec(spec)


def test_catalog_files_are_canonical():
    for filename in CATALOG:
        text = files("gril.suite").joinpath("catalog", filename).read_text(encoding="utf-8")
        assert serialize_ring_spec(parse_ring_spec(text)) == text, filename


def test_build_from_path(tmp_path):
    path = tmp_path / "z12.json"
    path.write_text(json.dumps({"name": "z12", "ring": {"zmod": 12}, "ideals": {"six": ["6"]}, "phis": ["omega"]}))
    R, ideals, phis = parse_ring_spec(str(path)).build()
    assert R.size == 12
    assert ideals["six"].size == 2
    assert [str(p) for p in phis] == ["omega"]


def test_parse_error_has_position():
    with pytest.raises(SpecParseError) as exc:
        parse_ring_spec('{"name": "x",\n  "ring": {"zmod": 4},,}')
    assert exc.value.line == 2 and exc.value.column is not None


@pytest.mark.parametrize(
    "data",
    [
        {"ring": {"zmod": 4}},
        {"name": "x", "ring": {"zmod": 1}},
        {"name": "x", "ring": {"field": 4}},
        {"name": "x", "ring": {"product": [{"zmod": 2}]}},
        {"name": "x", "ring": {"zmod": 4}, "extra": 1},
        {"name": "x", "ring": {"zmod": 4}, "phis": ["square"]},
        {"name": "x", "ring": {"zmod": 4}, "grading": {"group": "free:2"}},
        {"name": "x", "ring": {"quotient_poly": {"modulus": [1, 1]}}},
    ],
)
def test_malformed_specs(data):
    with pytest.raises(SpecParseError):
        parse_ring_spec(json.dumps(data))


def test_missing_file():
    with pytest.raises(SpecParseError):
        parse_ring_spec("/nonexistent/ring.json")


def test_invalid_grading_reports_witness():
    spec = parse_ring_spec(
        json.dumps(
            {
                "name": "bad",
                "ring": {"quotient_poly": {"base": {"zmod": 3}, "modulus": [1, 0, 1], "var": "i"}},
                "grading": {"group": "cyclic:3", "degrees": {"i": 1}},
            }
        )
    )
    with pytest.raises(SpecValidationError) as exc:
        spec.build()
    assert exc.value.witness == {"a": "i", "b": "i"}


_leaf = st.builds(lambda n: {"zmod": n}, st.integers(2, 12))
_poly = st.builds(
    lambda base, t: {"quotient_poly": {"base": base, "truncate": t, "var": "X"}}, _leaf, st.integers(1, 3)
)
_gauss = st.builds(
    lambda base: {"quotient_poly": {"base": base, "modulus": [1, 0, 1], "var": "i"}}, _leaf
)
_rings = st.recursive(
    st.one_of(_leaf, _poly, _gauss),
    lambda inner: st.builds(lambda fs: {"product": fs}, st.lists(inner, min_size=2, max_size=3)),
    max_leaves=4,
)


@given(_rings)
def test_presentations_round_trip(d):
    assert presentation_to_dict(presentation_from_dict(d)) == d
