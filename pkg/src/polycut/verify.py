"""Decision procedures: uniformity, k-face embedding, face-normal angle tests.

All length-type deviations are relative to the solid's mean edge length or
circumradius, so the checks are invariant under uniform scaling.
"""

from __future__ import annotations

import itertools
import math
from collections import Counter
from dataclasses import dataclass, field
from typing import Callable, Mapping

import numpy as np
from scipy.spatial import cKDTree

from polycut.errors import GeometryError, NotContained, NotProperSubset
from polycut.geometry import DEFAULT_TOL, Polyhedron, Tolerance, cross, dihedral_between

TETRA_DOT = -1.0 / 3.0


def face_regularity(p: Polyhedron, tol: Tolerance = DEFAULT_TOL) -> tuple[float, float]:
    """Worst (relative edge-length deviation, interior-angle deviation in radians) over faces."""
    worst_len = worst_ang = 0.0
    for face in p.faces:
        pts = p.vertices[list(face)]
        n = len(face)
        sides = np.linalg.norm(np.roll(pts, -1, axis=0) - pts, axis=1)
        worst_len = max(worst_len, float(np.abs(sides - sides.mean()).max() / sides.mean()))
        regular = (n - 2) * math.pi / n
        for k in range(n):
            a = pts[k - 1] - pts[k]
            b = pts[(k + 1) % n] - pts[k]
            cos = np.clip(a @ b / (np.linalg.norm(a) * np.linalg.norm(b)), -1.0, 1.0)
            worst_ang = max(worst_ang, abs(math.acos(cos) - regular))
    return worst_len, worst_ang


def edge_spread(p: Polyhedron) -> float:
    lengths = p.edge_lengths()
    return float(np.ptp(lengths) / lengths.mean())


def _frame(a: np.ndarray, b: np.ndarray, handed: float) -> np.ndarray:
    e1 = a / np.linalg.norm(a)
    e2 = b - (b @ e1) * e1
    e2 /= np.linalg.norm(e2)
    return np.column_stack((e1, e2, handed * cross(e1, e2)))


def vertex_transitive(p: Polyhedron, tol: Tolerance = DEFAULT_TOL) -> bool:
    """True when every vertex is the image of vertex 0 under a symmetry of the vertex set.

    Candidate symmetries are the orthogonal maps carrying the frame
    (vertex direction, one incident edge) at vertex 0 onto each frame at the
    target vertex, in both handednesses.
    """
    v = p.vertices - p.centroid
    radius = float(np.linalg.norm(v, axis=1).mean())
    eps = tol.verify * radius
    tree = cKDTree(v)
    base = _frame(v[0], v[p.neighbors[0][0]] - v[0], 1.0)
    for w in range(len(v)):
        if abs(np.linalg.norm(v[w]) - np.linalg.norm(v[0])) > eps:
            return False
        found = False
        for j in p.neighbors[w]:
            for handed in (1.0, -1.0):
                rot = _frame(v[w], v[j] - v[w], handed) @ base.T
                dist, idx = tree.query(v @ rot.T)
                if dist.max() <= eps and len(set(idx.tolist())) == len(v):
                    found = True
                    break
            if found:
                break
        if not found:
            return False
    return True


def is_uniform(p: Polyhedron, tol: Tolerance = DEFAULT_TOL) -> bool:
    dev_len, dev_ang = face_regularity(p)
    return (
        dev_len <= tol.verify
        and dev_ang <= tol.verify
        and edge_spread(p) <= tol.verify
        and vertex_transitive(p, tol)
    )


def contains(a: Polyhedron, b: Polyhedron, tol: Tolerance = DEFAULT_TOL) -> bool:
    """True iff every vertex of ``b`` lies in every halfspace of ``a``."""
    slack = b.vertices @ a.normals.T - a.offsets
    return bool(slack.max() <= tol.coplanar)


@dataclass(frozen=True)
class EmbeddingContact:
    k: int
    touching_faces: tuple[int, ...]
    extra_contact: tuple[int, ...]  # boundary vertices of S outside the touching faces


def embedding_contact(s: Polyhedron, outer: Polyhedron, tol: Tolerance = DEFAULT_TOL) -> EmbeddingContact:
    slack = s.vertices @ outer.normals.T - outer.offsets
    if slack.max() > tol.coplanar:
        raise NotContained(f"a vertex lies {slack.max():.3g} outside the outer solid")
    if len(s.vertices) == len(outer.vertices):
        dist, _ = cKDTree(s.vertices).query(outer.vertices)
        if dist.max() <= tol.weld:
            raise NotProperSubset("the solids coincide")
    on_plane = np.abs(slack) <= tol.coplanar
    touching = []
    for fi, face in enumerate(s.faces):
        n = s.face_planes[fi].normal
        for gi, plane in enumerate(outer.face_planes):
            if np.linalg.norm(n - plane.normal) <= tol.coplanar and on_plane[list(face), gi].all():
                touching.append(fi)
                break
    on_faces = {i for fi in touching for i in s.faces[fi]}
    extra = tuple(int(i) for i in np.flatnonzero(on_plane.any(axis=1)) if i not in on_faces)
    return EmbeddingContact(len(touching), tuple(touching), extra)


def k_face_embedding(s: Polyhedron, outer: Polyhedron, tol: Tolerance = DEFAULT_TOL) -> int:
    """Number of faces of ``s`` lying in the boundary of ``outer``."""
    return embedding_contact(s, outer, tol).k


def face_pair_angles(p: Polyhedron, tol: Tolerance = DEFAULT_TOL) -> tuple[float, ...]:
    """Sorted distinct dihedral_between values over all face pairs.

    Opposite parallel faces are reported as pi, the convention of the
    classical face-angle tables.
    """
    n = p.normals
    angles = []
    for i, j in itertools.combinations(range(len(n)), 2):
        if n[i] @ n[j] < -1.0 + tol.verify:
            angles.append(math.pi)
        else:
            angles.append(dihedral_between(n[i], n[j]))
    out: list[float] = []
    for a in sorted(angles):
        if not out or a - out[-1] > tol.verify:
            out.append(a)
    return tuple(out)


def tetrahedral_quadruples(p: Polyhedron, tol: float) -> list[tuple[int, int, int, int]]:
    """All 4-sets of face indices whose normals are pairwise at dot -1/3 within ``tol``."""
    n = p.normals
    close = np.abs(n @ n.T - TETRA_DOT) <= tol
    adj = [set(np.flatnonzero(row).tolist()) for row in close]
    found = []
    for a in range(len(n)):
        for b in (x for x in adj[a] if x > a):
            common = {x for x in adj[a] & adj[b] if x > b}
            for c in sorted(common):
                for d in sorted(x for x in common & adj[c] if x > c):
                    found.append((a, b, c, d))
    return found


def has_tetrahedral_quadruple(p: Polyhedron, tol: float = DEFAULT_TOL.verify) -> bool:
    return bool(tetrahedral_quadruples(p, tol))


def shared_face_normals(a: Polyhedron, b: Polyhedron, tol: float = DEFAULT_TOL.verify) -> int:
    """Number of outward face normals of ``a`` that also occur on ``b``."""
    dist, _ = cKDTree(b.normals).query(a.normals)
    return int((dist <= tol).sum())


@dataclass
class VerifyReport:
    solid_name: str
    is_uniform: bool
    max_edge_spread: float
    max_face_edge_dev: float
    max_face_angle_dev: float
    embedding_k: int | None = None
    extra_contact: int = 0
    has_quadruple: bool | None = None
    dihedral_spectrum: tuple[float, ...] = field(default=(), repr=False)
    census_ok: bool = True
    expectation: str = ""
    passed: bool = False
    note: str = ""

    def row(self) -> str:
        k = "-" if self.embedding_k is None else str(self.embedding_k)
        q = "-" if self.has_quadruple is None else ("yes" if self.has_quadruple else "no")
        status = "PASS" if self.passed else "FAIL"
        return (
            f"{self.solid_name:<6} {status:<5} uniform={'yes' if self.is_uniform else 'no':<3} "
            f"spread={self.max_edge_spread:.1e} face={max(self.max_face_edge_dev, self.max_face_angle_dev):.1e} "
            f"k={k:<2} quad={q:<3} {self.expectation}{'  ' + self.note if self.note else ''}"
        )


def report(
    name: str,
    p: Polyhedron,
    outer: Polyhedron | None = None,
    expectation: str = "",
    tol: Tolerance = DEFAULT_TOL,
    census: Mapping[int, int] | None = None,
) -> VerifyReport:
    """Measure ``p`` and judge it against ``expectation``.

    ``"embeds"`` requires uniformity and a clean 4-face embedding in
    ``outer``; ``"excluded"`` requires uniformity and no tetrahedral normal
    quadruple; ``"quadruple"`` requires uniformity and a quadruple.  Any other
    expectation just requires uniformity.
    """
    dev_len, dev_ang = face_regularity(p)
    rep = VerifyReport(
        solid_name=name,
        is_uniform=is_uniform(p, tol),
        max_edge_spread=edge_spread(p),
        max_face_edge_dev=dev_len,
        max_face_angle_dev=dev_ang,
        dihedral_spectrum=face_pair_angles(p, tol),
        expectation=expectation,
    )
    ok = rep.is_uniform
    if census is not None:
        got = Counter(len(f) for f in p.faces)
        rep.census_ok = dict(got) == dict(census)
        if not rep.census_ok:
            rep.note = f"face census {dict(sorted(got.items()))} != {dict(sorted(census.items()))}"
        ok = ok and rep.census_ok
    if outer is not None:
        try:
            contact = embedding_contact(p, outer, tol)
            rep.embedding_k = contact.k
            rep.extra_contact = len(contact.extra_contact)
        except GeometryError as exc:
            rep.note = (rep.note + "; " if rep.note else "") + f"{type(exc).__name__}: {exc}"
    if expectation == "embeds":
        ok = ok and rep.embedding_k == 4 and rep.extra_contact == 0
    elif expectation in ("excluded", "quadruple"):
        rep.has_quadruple = has_tetrahedral_quadruple(p, 1e-6)
        ok = ok and rep.has_quadruple == (expectation == "quadruple")
    rep.passed = bool(ok)
    return rep


def main_theorem_check(
    nmax: int = 50,
    overrides: Mapping[str, Polyhedron] | None = None,
    tol: Tolerance = DEFAULT_TOL,
    progress: Callable[[VerifyReport], None] | None = None,
) -> list[VerifyReport]:
    """Check both directions of the tetrahedron characterisation.

    Forward: O, I and the 13 Archimedean solids are uniform and 4-face
    embedded in the unit tetrahedron.  Converse: C, D, prisms and antiprisms
    up to ``nmax`` have no four face normals pairwise at the tetrahedral
    angle.  The 4-prism is the cube and is listed once, as C; the 3-antiprism
    is the octahedron and is listed with the opposite expectation.
    """
    from polycut import catalog

    if nmax < 5:
        raise ValueError("nmax must be at least 5")
    overrides = dict(overrides or {})
    outer = catalog.build("T")

    def get(name):
        return overrides[name] if name in overrides else catalog.build(name)

    def check(name, expectation, with_outer=False):
        return report(name, get(name), outer if with_outer else None, expectation, tol, catalog.expected_census(name))

    reports = []

    def add(rep):
        reports.append(rep)
        if progress:
            progress(rep)

    for name in catalog.EMBEDDABLE:
        add(check(name, "embeds", with_outer=True))
    for name in ("C", "D"):
        add(check(name, "excluded"))
    for n in range(3, nmax + 1):
        if n != 4:
            add(check(f"P{n}", "excluded"))
    rep = check("A3", "quadruple")
    rep.note = "congruent to O; covered by the forward direction"
    add(rep)
    for n in range(4, nmax + 1):
        add(check(f"A{n}", "excluded"))
    return reports
