from __future__ import annotations

import math

import numpy as np
import pytest

from polycut import catalog, seeds
from polycut.errors import NotContained, NotProperSubset
from polycut.geometry import canonicalize
from polycut.truncation import SnubSpec, skew_truncate, vertex_truncate
from polycut.verify import (
    contains,
    embedding_contact,
    face_pair_angles,
    face_regularity,
    has_tetrahedral_quadruple,
    is_uniform,
    k_face_embedding,
    main_theorem_check,
    shared_face_normals,
    tetrahedral_quadruples,
    vertex_transitive,
)

from conftest import random_rotations


def perturbed_octahedron(eps: float = 1e-3):
    o = seeds.octahedron_in_T()
    v = o.vertices.copy()
    v[0] += eps * np.array([0.3, -0.5, 0.8])
    return canonicalize(v, o.faces)


class TestRegularity:
    def test_tetrahedron_is_regular(self):
        dev_len, dev_ang = face_regularity(seeds.tetrahedron())
        assert dev_len < 1e-15 and dev_ang < 1e-14

    def test_quarter_truncation_has_irregular_hexagons(self):
        dev_len, _ = face_regularity(vertex_truncate(seeds.tetrahedron(), 0.25))
        assert dev_len > 0.1


class TestVertexTransitive:
    def test_octahedron(self):
        assert vertex_transitive(seeds.octahedron_in_T())

    @pytest.mark.parametrize("chirality", ["left", "right"])
    def test_snub_cube(self, chirality):
        assert vertex_transitive(skew_truncate(seeds.octahedron_in_T(), SnubSpec.for_angle(90, chirality)))

    def test_perturbed_octahedron(self):
        assert not vertex_transitive(perturbed_octahedron())
        assert not is_uniform(perturbed_octahedron())

    def test_heptagonal_prism(self):
        assert is_uniform(seeds.prism(7))

    def test_tall_prism_not_uniform(self):
        p = seeds.prism(6)
        stretched = p.transformed(np.diag([1.0, 1.0, 1.5]))
        assert not is_uniform(stretched)

    def test_invariant_under_rotation_and_translation(self):
        tco = catalog.build("tCO")
        for rot in random_rotations(5, seed=3):
            assert is_uniform(tco.transformed(rot, translation=[0.3, -1.0, 2.0]))


class TestEmbedding:
    def test_shrunk_octahedron_does_not_touch(self):
        o = catalog.build("O")
        assert k_face_embedding(o.scaled(0.9), catalog.build("T")) == 0

    def test_solid_in_itself(self):
        t = seeds.tetrahedron()
        with pytest.raises(NotProperSubset):
            k_face_embedding(t, t)

    def test_not_contained(self):
        with pytest.raises(NotContained):
            k_face_embedding(catalog.build("O").scaled(1.1), catalog.build("T"))

    def test_vertex_touching_is_extra_contact(self):
        # the octahedron of edge 1/2 sitting on the unit T's edge midpoints: four
        # faces coplanar with T, and no other boundary point
        contact = embedding_contact(catalog.build("O"), catalog.build("T"))
        assert contact.k == 4 and contact.extra_contact == ()

    def test_truncated_tetrahedron_touches_through_every_face(self):
        # tT meets all four faces of T with its hexagons; its triangles lie inside
        assert k_face_embedding(catalog.build("tT"), seeds.tetrahedron()) == 4

    def test_contains(self):
        t, o = catalog.build("T"), catalog.build("O")
        assert contains(t, o)
        assert not contains(o, t)


class TestFacePairAngles:
    def test_cube(self):
        assert face_pair_angles(seeds.cube()) == pytest.approx((math.pi / 2, math.pi), abs=1e-12)

    def test_tetrahedron(self):
        assert face_pair_angles(seeds.tetrahedron()) == pytest.approx((math.acos(1 / 3),), abs=1e-12)

    def test_dodecahedron(self):
        # adjacent faces, next-nearest faces, opposite faces
        expected = sorted((math.acos(-1 / math.sqrt(5)), math.acos(1 / math.sqrt(5)), math.pi))
        assert face_pair_angles(seeds.dodecahedron()) == pytest.approx(tuple(expected), abs=1e-12)

    @pytest.mark.parametrize("n", range(3, 13))
    def test_prism(self, n):
        p = seeds.prism(n)
        # lateral normals 2 pi k / n apart; opposite lateral faces count as pi
        lateral = {math.pi - 2 * math.pi * k / n for k in range(1, (n + 1) // 2)}
        expected = sorted({round(a, 12) for a in lateral | {math.pi / 2, math.pi}})
        assert face_pair_angles(p) == pytest.approx(tuple(expected), abs=1e-9)


class TestQuadruple:
    def test_tetrahedron(self):
        t = seeds.tetrahedron()
        assert tetrahedral_quadruples(t, 1e-9) == [(0, 1, 2, 3)]

    @pytest.mark.parametrize("name", ["C", "D"])
    def test_cube_and_dodecahedron(self, name):
        assert not has_tetrahedral_quadruple(catalog.build(name), 1e-6)

    def test_antiprisms(self):
        for n in range(4, 51):
            assert not has_tetrahedral_quadruple(seeds.antiprism(n), 1e-6), n

    def test_octahedron_as_antiprism(self):
        assert has_tetrahedral_quadruple(seeds.antiprism(3))

    @pytest.mark.parametrize("name", ["tI", "tCO", "sD"])
    def test_embeddable(self, name):
        assert has_tetrahedral_quadruple(catalog.build(name))

    def test_rotation_invariant(self):
        ti, cube = catalog.build("tI"), seeds.cube()
        for rot in random_rotations(5, seed=11):
            assert has_tetrahedral_quadruple(ti.transformed(rot))
            assert not has_tetrahedral_quadruple(cube.transformed(rot), 1e-6)


class TestSharedNormals:
    def test_octahedron_and_host(self):
        o = seeds.octahedron_in_T()
        assert shared_face_normals(o, seeds.host_tetrahedron(o)) == 4

    def test_generic_rotation(self):
        rot = random_rotations(1, seed=7)[0]
        assert shared_face_normals(seeds.cube().transformed(rot), seeds.dodecahedron()) == 0

    def test_symmetric(self):
        a, b = catalog.build("tI"), catalog.build("tCO")
        assert shared_face_normals(a, b) == shared_face_normals(b, a)


class TestMainTheoremCheck:
    def test_small(self):
        reports = main_theorem_check(5)
        names = [r.solid_name for r in reports]
        assert names[:15] == list(catalog.EMBEDDABLE)
        assert {"C", "D", "P3", "P5", "A3", "A4", "A5"} <= set(names)
        assert "P4" not in names
        assert all(r.passed for r in reports), [r.row() for r in reports if not r.passed]

    def test_wrong_depth_from_cube_is_non_uniform(self):
        # the naive one-third cut of the cube leaves unequal octagon sides
        wrong = vertex_truncate(seeds.cube(), 1 / 3)
        assert face_regularity(wrong)[0] == pytest.approx(3 - 2 * math.sqrt(2), abs=1e-12)
        reports = {r.solid_name: r for r in main_theorem_check(5, overrides={"tC": wrong})}
        assert not reports["tC"].is_uniform
        assert not reports["tC"].passed

    def test_wrong_depth_from_octahedron_has_wrong_census(self):
        # one third of the octahedron's edge gives the truncated octahedron
        wrong = vertex_truncate(catalog.build("O"), 1 / 3)
        reports = {r.solid_name: r for r in main_theorem_check(5, overrides={"tC": wrong})}
        assert reports["tC"].is_uniform
        assert not reports["tC"].census_ok
        assert not reports["tC"].passed
        assert sum(not r.passed for r in reports.values()) == 1

    def test_nmax_too_small(self):
        with pytest.raises(ValueError):
            main_theorem_check(4)
