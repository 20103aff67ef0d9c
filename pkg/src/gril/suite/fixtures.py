"""The fixture catalog shipped with the package."""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from importlib import resources

from ..errors import SpecParseError
from ..ideals import enumerate_graded_ideals
from ..spec_io import parse_ring_spec

# rings up to this size are swept over all their graded ideals
SWEEP_LIMIT = 1000


@dataclass
class Fixture:
    spec: object
    _built: tuple | None = field(default=None, repr=False)

    @property
    def name(self):
        return self.spec.name

    @property
    def provenance(self):
        return self.spec.provenance

    def _build(self):
        if self._built is None:
            self._built = self.spec.build()
        return self._built

    @property
    def ring(self):
        return self._build()[0]

    @property
    def ideals(self):
        return self._build()[1]

    @property
    def phis(self):
        return self._build()[2]

    @property
    def size(self):
        from ..rings import presentation_size

        return presentation_size(self.spec.presentation())

    @property
    def sweepable(self):
        return self.size <= SWEEP_LIMIT

    def sweep_ideals(self):
        """Ideals a sweep quantifies over: all of them for small rings, else the named ones."""
        if self.sweepable:
            return list(enumerate_graded_ideals(self.ring))
        return list(self.ideals.values())

    def ideal_label(self, I):
        for name, J in self.ideals.items():
            if J == I:
                return name
        return repr(I)


def _catalog_dir():
    return resources.files("gril.suite") / "catalog"


def load_catalog():
    """All shipped fixtures, ordered by name."""
    fixtures = []
    for entry in sorted(_catalog_dir().iterdir(), key=lambda p: p.name):
        if entry.name.endswith(".json"):
            fixtures.append(Fixture(parse_ring_spec(entry.read_text(encoding="utf-8"))))
    return sorted(fixtures, key=lambda f: f.name)


def load_expectations():
    text = (resources.files("gril.suite") / "expectations.json").read_text(encoding="utf-8")
    return json.loads(text)


FIXTURE_SETS = ("all", "paper", "synthetic")


def select_fixtures(selector="all", catalog=None):
    """``all``, ``paper``, ``synthetic`` or a comma-separated list of names."""
    catalog = load_catalog() if catalog is None else catalog
    if selector in (None, "", "all"):
        return catalog
    if selector == "paper":
        return [f for f in catalog if f.provenance == "PAPER"]
    if selector == "synthetic":
        return [f for f in catalog if f.provenance != "PAPER"]
    names = [n.strip() for n in selector.split(",") if n.strip()]
    by_name = {f.name: f for f in catalog}
    missing = [n for n in names if n not in by_name]
    if missing:
        raise SpecParseError(f"unknown fixtures: {', '.join(missing)}")
    return [by_name[n] for n in names]
