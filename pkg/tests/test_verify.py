"""Tests for recomputing catalog tables."""

from dataclasses import replace
from fractions import Fraction

import pytest

from wdp_delta.catalog import DeltaTable, get_surface, list_surfaces
from wdp_delta.verify import verify_entry, verify_surface, verify_surfaces


@pytest.mark.parametrize("surface_id", list_surfaces())
def test_catalog_surface_passes(surface_id):
    outcome = verify_entry(get_surface(surface_id))
    assert outcome.passed, outcome.mismatches


def test_errata_are_reported_as_notes():
    outcome = verify_surface("dp5-5")
    assert outcome.passed
    assert "printed row F3\\F2 = 15/19, read as 10/13" in outcome.notes


def test_perturbed_row_is_one_mismatch(dp5_1):
    rows = tuple((row, "1" if row == "off-curves" else value) for row, value in dp5_1.table.rows)
    outcome = verify_entry(replace(dp5_1, table=DeltaTable(rows=rows)))
    assert not outcome.passed
    assert len(outcome.mismatches) == 1
    label, expected, computed = outcome.mismatches[0]
    assert label.startswith("off-curves / ")
    assert expected == 1
    assert computed == Fraction(4, 3)


def test_unknown_surface_is_an_error_outcome():
    outcome = verify_surface("nope")
    assert not outcome.passed
    assert outcome.error.startswith("UnknownSurface")


def test_parallel_keeps_order():
    ids = ["dp8-sigma2", "dp7-1", "dp8-sigma0"]
    outcomes = verify_surfaces(ids, jobs=2)
    assert [outcome.surface for outcome in outcomes] == ids
    assert all(outcome.passed for outcome in outcomes)


@pytest.mark.parametrize(
    "surface_id, note",
    [
        ("dp5-7", "printed row off-curves = 40/31, read as 4/3"),
        ("dp6-2", "printed row E1\\E2, E4\\E3 = 9/10, read as 1"),
        ("dp7-2", "printed row off-curves = 21/22, read as 21/19"),
    ],
)
def test_volume_slips_pass_with_their_errata(surface_id, note):
    outcome = verify_surface(surface_id)
    assert outcome.passed, outcome.mismatches
    assert note in outcome.notes
