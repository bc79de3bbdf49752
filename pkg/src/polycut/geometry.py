"""Convex polyhedra as vertex/face tables, and the halfspace clip that builds them.

Every solid in the package is produced by starting from a seed and applying
``clip`` repeatedly.  ``clip`` intersects each face polygon with the halfspace
(Sutherland-Hodgman in 3D), collects the cross-section as a new face, and hands
the raw result to ``canonicalize`` which welds, merges, orders and re-fits.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, Sequence

import numpy as np
from scipy.spatial import cKDTree

from polycut.errors import DegenerateResult, EmptyResult, NonConvexInput, NotMidscribed


@dataclass(frozen=True)
class Tolerance:
    """Explicit slack values; coordinates are assumed to be O(1)."""

    weld: float = 1e-9
    coplanar: float = 1e-8
    verify: float = 1e-7

    def __post_init__(self):
        if not (0 < self.weld <= self.coplanar <= self.verify < 1):
            raise ValueError(f"need 0 < weld <= coplanar <= verify < 1, got {self}")


DEFAULT_TOL = Tolerance()


@dataclass(frozen=True, eq=False)
class Plane:
    """Halfspace ``x . normal <= offset`` with a unit outward normal."""

    normal: np.ndarray
    offset: float

    def __post_init__(self):
        n = np.asarray(self.normal, dtype=float)
        if n.shape != (3,) or not np.all(np.isfinite(n)):
            raise ValueError(f"bad plane normal {self.normal!r}")
        if abs(np.linalg.norm(n) - 1.0) > 1e-9:
            raise ValueError(f"plane normal must be unit length, |n| = {np.linalg.norm(n)}")
        n.setflags(write=False)
        object.__setattr__(self, "normal", n)
        object.__setattr__(self, "offset", float(self.offset))

    @classmethod
    def through(cls, normal: Sequence[float], point: Sequence[float]) -> "Plane":
        n = np.asarray(normal, dtype=float)
        n = n / np.linalg.norm(n)
        return cls(n, float(n @ np.asarray(point, dtype=float)))

    def signed_distance(self, points) -> np.ndarray:
        return np.asarray(points, dtype=float) @ self.normal - self.offset

    def __repr__(self):
        n = ", ".join(f"{c:.6g}" for c in self.normal)
        return f"Plane(normal=({n}), offset={self.offset:.6g})"


@dataclass(frozen=True, eq=False)
class Polyhedron:
    """A convex solid.

    ``faces`` are cyclic vertex-index tuples, counterclockwise seen from
    outside; ``face_planes[i]`` is the outward supporting plane of face ``i``.
    Instances are immutable; use :func:`canonicalize` or
    :meth:`from_faces` to construct them.
    """

    vertices: np.ndarray
    faces: tuple[tuple[int, ...], ...]
    face_planes: tuple[Plane, ...] = field(repr=False)

    def __post_init__(self):
        v = np.array(self.vertices, dtype=float)
        if v.ndim != 2 or v.shape[1] != 3 or not np.all(np.isfinite(v)):
            raise ValueError("vertices must be a finite (N, 3) array")
        v.setflags(write=False)
        object.__setattr__(self, "vertices", v)
        object.__setattr__(self, "faces", tuple(tuple(int(i) for i in f) for f in self.faces))
        object.__setattr__(self, "face_planes", tuple(self.face_planes))
        if len(self.faces) != len(self.face_planes):
            raise ValueError("one plane per face required")

    @classmethod
    def from_faces(cls, vertices, faces: Iterable[Sequence[int]]) -> "Polyhedron":
        """Wrap an already-clean mesh, fitting planes but keeping indices as given."""
        v = np.asarray(vertices, dtype=float)
        faces = [tuple(f) for f in faces]
        return cls(v, tuple(faces), tuple(_fit_plane(v[list(f)]) for f in faces))

    def __repr__(self):
        return f"Polyhedron(V={len(self.vertices)}, E={len(self.edges)}, F={len(self.faces)})"

    @cached_property
    def edges(self) -> tuple[tuple[int, int], ...]:
        return tuple(sorted(self.edge_faces))

    @cached_property
    def edge_faces(self) -> dict[tuple[int, int], list[int]]:
        """Map from sorted vertex pair to the faces using that edge."""
        out: dict[tuple[int, int], list[int]] = {}
        for fi, face in enumerate(self.faces):
            for a, b in zip(face, face[1:] + face[:1]):
                out.setdefault((min(a, b), max(a, b)), []).append(fi)
        return out

    @cached_property
    def neighbors(self) -> tuple[tuple[int, ...], ...]:
        nb: list[set[int]] = [set() for _ in self.vertices]
        for a, b in self.edges:
            nb[a].add(b)
            nb[b].add(a)
        return tuple(tuple(sorted(s)) for s in nb)

    @property
    def normals(self) -> np.ndarray:
        return np.array([pl.normal for pl in self.face_planes])

    @property
    def offsets(self) -> np.ndarray:
        return np.array([pl.offset for pl in self.face_planes])

    @property
    def centroid(self) -> np.ndarray:
        return self.vertices.mean(axis=0)

    def edge_lengths(self) -> np.ndarray:
        e = np.array(self.edges)
        return np.linalg.norm(self.vertices[e[:, 0]] - self.vertices[e[:, 1]], axis=1)

    def euler_characteristic(self) -> int:
        return len(self.vertices) - len(self.edges) + len(self.faces)

    def is_closed_manifold(self) -> bool:
        return all(len(fs) == 2 for fs in self.edge_faces.values())

    def volume(self) -> float:
        total = 0.0
        for face, plane in zip(self.faces, self.face_planes):
            total += plane.offset * polygon_area(self.vertices[list(face)], plane.normal)
        return total / 3.0

    def transformed(self, matrix=None, translation=None, scale: float = 1.0) -> "Polyhedron":
        """Apply ``x -> scale * matrix @ x + translation``; matrix must be orthogonal."""
        m = np.eye(3) if matrix is None else np.asarray(matrix, dtype=float)
        t = np.zeros(3) if translation is None else np.asarray(translation, dtype=float)
        v = scale * self.vertices @ m.T + t
        faces = self.faces
        if np.linalg.det(m) * scale < 0:
            faces = tuple((f[0],) + tuple(reversed(f[1:])) for f in faces)
        return Polyhedron.from_faces(v, faces)

    def scaled(self, s: float) -> "Polyhedron":
        return self.transformed(scale=s)


def polygon_area(points: np.ndarray, normal: np.ndarray) -> float:
    """Signed area of a planar polygon, positive when ccw about ``normal``."""
    return 0.5 * float(cross(points, np.roll(points, -1, axis=0)).sum(axis=0) @ normal)


def cross(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    """``np.cross`` for (..., 3) arrays without its per-call overhead."""
    a = np.asarray(a, dtype=float)
    b = np.asarray(b, dtype=float)
    return np.stack(
        (
            a[..., 1] * b[..., 2] - a[..., 2] * b[..., 1],
            a[..., 2] * b[..., 0] - a[..., 0] * b[..., 2],
            a[..., 0] * b[..., 1] - a[..., 1] * b[..., 0],
        ),
        axis=-1,
    )


def _fit_plane(points: np.ndarray) -> Plane:
    """Least-squares plane oriented by the polygon's winding."""
    c = points.mean(axis=0)
    _, _, vt = np.linalg.svd(points - c)
    n = vt[2]
    if polygon_area(points, n) < 0:
        n = -n
    return Plane(n / np.linalg.norm(n), float(n @ c) / np.linalg.norm(n))


def dihedral_between(n1, n2) -> float:
    """Interior dihedral angle between faces with unit outward normals n1, n2.

    Returns ``pi - arccos(n1 . n2)``, so adjacent tetrahedron faces give
    arccos(1/3) and identical normals give pi.
    """
    d = float(np.clip(np.dot(n1, n2), -1.0, 1.0))
    return math.pi - math.acos(d)


def midsphere_radius(p: Polyhedron, tol: Tolerance = DEFAULT_TOL) -> float:
    mids = 0.5 * (p.vertices[[a for a, _ in p.edges]] + p.vertices[[b for _, b in p.edges]])
    r = np.linalg.norm(mids - p.centroid, axis=1)
    mean = float(r.mean())
    spread = float(r.max() - r.min())
    if spread > tol.verify * max(1.0, mean):
        raise NotMidscribed(f"edge midpoint distances vary by {spread:.3g}")
    return mean


def _weld(vertices: np.ndarray, eps: float) -> tuple[np.ndarray, np.ndarray]:
    """Cluster points closer than ``eps``; returns (representatives, index map)."""
    n = len(vertices)
    parent = list(range(n))

    def find(i):
        while parent[i] != i:
            parent[i] = parent[parent[i]]
            i = parent[i]
        return i

    for i, j in cKDTree(vertices).query_pairs(eps):
        ri, rj = find(i), find(j)
        if ri != rj:
            parent[max(ri, rj)] = min(ri, rj)
    roots = [find(i) for i in range(n)]
    order = sorted(set(roots))
    slot = {r: k for k, r in enumerate(order)}
    mapping = np.array([slot[r] for r in roots])
    reps = np.zeros((len(order), 3))
    counts = np.zeros(len(order))
    np.add.at(reps, mapping, vertices)
    np.add.at(counts, mapping, 1)
    return reps / counts[:, None], mapping


def canonicalize(vertices, raw_faces: Iterable[Iterable[int]], tol: Tolerance = DEFAULT_TOL) -> Polyhedron:
    """Turn raw clipped geometry into a clean convex :class:`Polyhedron`.

    Welds vertices within ``tol.weld``, merges faces sharing a supporting
    plane, drops collinear and unreferenced vertices, orders every face
    counterclockwise from outside and re-fits its plane by least squares.
    """
    verts, mapping = _weld(np.asarray(vertices, dtype=float), tol.weld)
    faces = []
    for raw in raw_faces:
        idx = list(dict.fromkeys(int(mapping[i]) for i in raw))
        if len(idx) >= 3:
            faces.append(idx)
    if len(faces) < 4:
        raise DegenerateResult(f"only {len(faces)} faces survive")
    used = sorted({i for f in faces for i in f})
    interior = verts[used].mean(axis=0)

    # group faces by supporting plane
    groups: list[tuple[np.ndarray, float, set[int]]] = []
    keys = np.empty((len(faces), 4))
    for idx in faces:
        pts = verts[idx]
        c = pts.mean(axis=0)
        _, s, vt = np.linalg.svd(pts - c)
        if s[1] <= tol.weld:
            continue
        n = vt[2]
        if n @ (c - interior) < 0:
            n = -n
        d = float(n @ c)
        if groups:
            diff = keys[: len(groups)] - np.append(n, d)
            hit = np.flatnonzero(
                (np.einsum("ij,ij->i", diff[:, :3], diff[:, :3]) <= tol.coplanar**2)
                & (np.abs(diff[:, 3]) <= tol.coplanar)
            )
            if len(hit):
                groups[hit[0]][2].update(idx)
                continue
        keys[len(groups)] = np.append(n, d)
        groups.append((n, d, set(idx)))

    ordered = []
    for n, _, members in groups:
        idx = sorted(members)
        pts = verts[idx] - verts[idx].mean(axis=0)
        u = cross(n, [1.0, 0.0, 0.0] if abs(n[0]) < 0.9 else [0.0, 1.0, 0.0])
        u /= np.linalg.norm(u)
        w = cross(n, u)
        angle = np.arctan2(pts @ w, pts @ u)
        ordered.append([idx[k] for k in np.argsort(angle, kind="stable")])

    # a corner of a convex solid lies on at least three faces; points lying on
    # fewer are collinear edge points or interior points of merged faces
    while True:
        count = np.zeros(len(verts), dtype=int)
        for f in ordered:
            count[f] += 1
        if all(count[f].min() >= 3 for f in ordered):
            break
        ordered = [[i for i in f if count[i] >= 3] for f in ordered]
        ordered = [f for f in ordered if len(f) >= 3]
    if len(ordered) < 4:
        raise DegenerateResult(f"only {len(ordered)} faces survive")

    keep = sorted({i for f in ordered for i in f})
    remap = {old: new for new, old in enumerate(keep)}
    new_verts = verts[keep]
    new_faces = [tuple(remap[i] for i in f) for f in ordered]
    # start each face at its smallest index for a stable representation
    new_faces = [f[f.index(min(f)):] + f[: f.index(min(f))] for f in new_faces]
    poly = Polyhedron.from_faces(new_verts, new_faces)

    slack = poly.vertices @ poly.normals.T - poly.offsets
    if slack.max() > tol.coplanar:
        raise NonConvexInput(f"vertex outside a face plane by {slack.max():.3g}")
    if not poly.is_closed_manifold() or poly.euler_characteristic() != 2:
        raise DegenerateResult(
            f"result is not a closed polyhedron (chi={poly.euler_characteristic()})"
        )
    return poly


def clip(p: Polyhedron, h: Plane, tol: Tolerance = DEFAULT_TOL) -> Polyhedron:
    """Intersect ``p`` with the halfspace ``x . h.normal <= h.offset``."""
    d = h.signed_distance(p.vertices)
    # slivers thinner than the coplanarity slack are not cut off or kept
    if d.max() <= tol.coplanar:
        return p
    if d.min() >= -tol.coplanar:
        if d.min() > tol.coplanar:
            raise EmptyResult("halfspace excludes the whole solid")
        raise DegenerateResult("halfspace meets the solid only near its boundary")
    d[np.abs(d) <= tol.coplanar] = 0.0

    verts = list(p.vertices)
    crossing: dict[tuple[int, int], int] = {}
    cut: set[int] = {int(i) for i in np.flatnonzero(d == 0.0)}

    def cross_point(a: int, b: int) -> int:
        key = (min(a, b), max(a, b))
        if key not in crossing:
            t = d[a] / (d[a] - d[b])
            verts.append(p.vertices[a] + t * (p.vertices[b] - p.vertices[a]))
            crossing[key] = len(verts) - 1
            cut.add(crossing[key])
        return crossing[key]

    new_faces = []
    for face in p.faces:
        out = []
        for a, b in zip(face, face[1:] + face[:1]):
            if d[a] <= 0.0:
                out.append(a)
            if (d[a] < 0.0 < d[b]) or (d[b] < 0.0 < d[a]):
                out.append(cross_point(a, b))
        if len(out) >= 3:
            new_faces.append(out)
    new_faces.append(sorted(cut))
    return canonicalize(np.array(verts), new_faces, tol)


def clip_all(p: Polyhedron, planes: Iterable[Plane], tol: Tolerance = DEFAULT_TOL) -> Polyhedron:
    for h in planes:
        p = clip(p, h, tol)
    return p
