"""Theorem checks over a catalog of fixture rings."""

from .checks import CHECK_IDS, REGISTRY, run_all, run_check
from .fixtures import Fixture, load_catalog, load_expectations, select_fixtures

__all__ = [
    "CHECK_IDS",
    "REGISTRY",
    "Fixture",
    "load_catalog",
    "load_expectations",
    "run_all",
    "run_check",
    "select_fixtures",
]
