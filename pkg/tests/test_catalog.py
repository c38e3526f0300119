"""The worked-example catalog stays valid and frozen."""

import pytest

from mwlattice.catalog import build_catalog, catalog_entry
from mwlattice.scenarios import validate_scenario


def test_catalog_size_and_names():
    entries = build_catalog()
    assert len(entries) >= 10
    names = [e.name for e in entries]
    assert len(set(names)) == len(names)
    for g in (1, 2, 3):
        assert "trivial-mw-g%d" % g in names
        assert "all-irreducible-g%d" % g in names


def test_catalog_scenarios_validate():
    for entry in build_catalog():
        report = validate_scenario(entry.scenario)
        assert report.ok, (entry.name, report.failures())


def test_catalog_covers_all_three_genera_with_reducible_fibers():
    by_genus = {1: 0, 2: 0, 3: 0}
    for entry in build_catalog():
        if entry.scenario.fibers:
            by_genus[entry.scenario.genus] += 1
    assert all(count >= 2 for count in by_genus.values())


def test_catalog_lookup():
    entry = catalog_entry("g1-star")
    assert entry.scenario.name == "g1-star"
    with pytest.raises(KeyError):
        catalog_entry("no-such-entry")
