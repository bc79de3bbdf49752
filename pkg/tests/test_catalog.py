from __future__ import annotations

import math

import numpy as np
import pytest

from polycut import catalog, seeds
from polycut.truncation import SnubSpec, TruncationParams
from polycut.verify import is_uniform

from conftest import hull_signature

# (V, E, F) of the named solids; standard tables
VEF = {
    "T": (4, 6, 4),
    "C": (8, 12, 6),
    "O": (6, 12, 8),
    "D": (20, 30, 12),
    "I": (12, 30, 20),
    "tT": (12, 18, 8),
    "tC": (24, 36, 14),
    "tO": (24, 36, 14),
    "tD": (60, 90, 32),
    "tI": (60, 90, 32),
    "CO": (12, 24, 14),
    "ID": (30, 60, 32),
    "eO": (24, 48, 26),
    "eI": (60, 120, 62),
    "tCO": (48, 72, 26),
    "tID": (120, 180, 62),
    "sC": (24, 60, 38),
    "sD": (60, 150, 92),
}

NAMES = list(catalog.PLATONIC + catalog.ARCHIMEDEAN)


@pytest.mark.parametrize("name", NAMES)
def test_signature_matches_hull_oracle(name):
    p = catalog.build(name)
    sig = catalog.signature(p)
    v, e, f, census = hull_signature(p.vertices)
    assert (sig.V, sig.E, sig.F) == (v, e, f) == VEF[name]
    assert sig.census() == census == catalog.expected_census(name)


@pytest.mark.parametrize("name", NAMES)
def test_every_build_is_uniform_closed_manifold(name):
    p = catalog.build(name)
    assert p.is_closed_manifold() and p.euler_characteristic() == 2
    assert is_uniform(p)


@pytest.mark.parametrize("name", catalog.EMBEDDABLE)
def test_embeddable_solids_share_the_unit_tetrahedron(name):
    t = catalog.build("T")
    p = catalog.build(name)
    slack = p.vertices @ t.normals.T - t.offsets
    assert slack.max() < 1e-12


def test_truncated_cube_depth_identity():
    assert catalog.TC_DEPTH == pytest.approx(2 - math.sqrt(2), abs=1e-15)


def test_truncated_dodecahedron_depth():
    phi = seeds.PHI
    assert catalog.TD_DEPTH == pytest.approx((2 + phi) / (3 + 2 * phi), abs=1e-15)


def test_build_is_cached_and_deterministic():
    assert catalog.build("tCO") is catalog.build("tCO")
    fresh = catalog._construct("tCO")
    assert np.array_equal(fresh.vertices, catalog.build("tCO").vertices)
    assert fresh.faces == catalog.build("tCO").faces


@pytest.mark.parametrize("name", ["P3", "P17", "A4", "A50"])
def test_families(name):
    p = catalog.build(name)
    v, e, f, census = hull_signature(p.vertices)
    assert catalog.signature(p).census() == census == catalog.expected_census(name)


def test_family_census_edge_cases():
    assert catalog.expected_census("P4") == {4: 6}
    assert catalog.expected_census("A3") == {3: 8}
    assert catalog.expected_census("A7") == {3: 14, 7: 2}


@pytest.mark.parametrize("name", ["X", "P2", "A1", "tT2", "", "p5"])
def test_unknown_names(name):
    assert not catalog.is_valid_name(name)
    with pytest.raises(KeyError):
        catalog.build(name)


def test_known_names():
    names = catalog.known_names(6)
    assert names[:18] == NAMES
    assert names[18:] == ["P3", "P4", "P5", "P6", "A3", "A4", "A5", "A6"]


def test_params_for():
    assert catalog.params_for("tT") == pytest.approx(1 / 3)
    assert catalog.params_for("CO") == 0.5
    assert isinstance(catalog.params_for("tID"), TruncationParams)
    assert catalog.params_for("tID").mode == "omnitruncate"
    assert isinstance(catalog.params_for("sD"), SnubSpec)
    assert catalog.params_for("O") is None
