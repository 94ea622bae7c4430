"""Smoke tests for the polcatpy module: one round trip per exposed operation."""

import json
import pathlib

import pytest

import polcatpy

DATA = pathlib.Path(__file__).resolve().parents[2] / "data"

CHAIN2 = [[True, True], [False, True]]
ANTICHAIN2 = [[True, False], [False, True]]


def test_macneille_of_antichain_has_four_cuts():
    out = polcatpy.macneille(ANTICHAIN2)
    assert len(out["cuts"]) == 4
    assert sorted(out["unit"]) == sorted(set(out["unit"]))  # injective unit


def test_monotone_map_enumeration_counts():
    assert len(polcatpy.monotone_maps(CHAIN2, CHAIN2)) == 3
    assert len(polcatpy.monotone_maps(ANTICHAIN2, CHAIN2)) == 4


def test_continuity_of_simple_maps():
    assert polcatpy.is_continuous(CHAIN2, CHAIN2, [0, 1])
    assert polcatpy.is_continuous(ANTICHAIN2, CHAIN2, [0, 1])
    with pytest.raises(RuntimeError):
        polcatpy.is_continuous(CHAIN2, CHAIN2, [1, 0])  # not monotone


def test_ba_hom_counts():
    assert len(polcatpy.ba_homs(1, 2)) == 1
    assert len(polcatpy.ba_homs(3, 3)) == 27


def test_multiplier_of_z2_is_z2():
    add = [[0, 1], [1, 0]]
    mul = [[0, 0], [0, 1]]
    out = polcatpy.multiplier(add, mul)
    assert len(out["add"]) == 2
    assert sorted(out["embedding"]) == [0, 1]


def test_multiplier_rejects_degenerate_rings():
    add = [[0, 1], [1, 0]]
    zero_mul = [[0, 0], [0, 0]]
    with pytest.raises(RuntimeError):
        polcatpy.multiplier(add, zero_mul)


def test_verify_boolean_universe_file():
    report = json.loads(polcatpy.verify_file(str(DATA / "boolean_universe.json")))
    assert report["pass"] is True
    assert len(report["theorem_main"]) == 12
    assert all(item["holds"] for item in report["theorem_main"])
    assert report["corollary_main"]["equivalent"] is True


def test_verify_ring_universe_file():
    report = json.loads(polcatpy.verify_file(str(DATA / "rings_universe.json")))
    assert report["pass"] is True
    assert len(report["theorem_main"]) == 12


def test_complete_object_from_universe_file():
    out = polcatpy.complete_object(
        str(DATA / "posets_le3.json"), "antichain2", budget=200000
    )
    assert out["absent"] is False
    assert not out["unit_is_iso"]
