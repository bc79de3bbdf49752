"""Vertex, edge, combined and skew truncations of seed solids.

Depths are fractions of the seed's edge length, so every operation is
independent of the seed's absolute scale.  Each operation computes all of its
cutting planes from the seed first and then clips them in sequence; cuts that
run past the edge midpoint (truncated cube / dodecahedron) need no special
handling because each clip acts on the current solid.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Literal

import numpy as np

from polycut.errors import (
    DepthOutOfRange,
    InconsistentParams,
    NoRootInBracket,
    NonUniformResult,
    SingularSystem,
)
from polycut.geometry import DEFAULT_TOL, Plane, Polyhedron, Tolerance, clip_all

SQRT3 = math.sqrt(3.0)


@dataclass(frozen=True)
class TruncationParams:
    """Vertex depth ``r1`` and edge depth ``r2``, both per unit edge.

    ``mode`` records which regularity conditions produced the pair, if any.
    """

    r1: float
    r2: float
    mode: str | None = None

    def __post_init__(self):
        if not 0.0 < self.r1 < 1.0:
            raise DepthOutOfRange(f"r1 must lie in (0, 1), got {self.r1}")
        if not 0.0 <= self.r2 < 0.5:
            raise DepthOutOfRange(f"r2 must lie in [0, 1/2), got {self.r2}")


@dataclass(frozen=True)
class DerivedLengths:
    l1: float  # hexagon side along a vertex cut
    l2: float  # hexagon side along an edge cut
    l3: float  # width of the edge-cut rectangle


@dataclass(frozen=True)
class SnubSpec:
    alpha_deg: float
    ratio: float
    chirality: Literal["left", "right"] = "left"

    def __post_init__(self):
        if self.chirality not in ("left", "right"):
            raise ValueError(f"chirality must be 'left' or 'right', got {self.chirality!r}")
        res = snub_cubic(self.ratio, self.alpha_deg)
        if abs(res) > 1e-12:
            raise ValueError(f"ratio {self.ratio} is not a root of the snub cubic (residual {res:.3g})")

    @classmethod
    def for_angle(cls, alpha_deg: float, chirality: Literal["left", "right"] = "left") -> "SnubSpec":
        return cls(alpha_deg, snub_ratio(alpha_deg), chirality)


def edge_length(p: Polyhedron) -> float:
    return float(p.edge_lengths().mean())


def vertex_planes(p: Polyhedron, alpha: float) -> list[Plane]:
    """One plane per vertex, perpendicular to its position vector, ``alpha`` along each edge."""
    planes = []
    for i, v in enumerate(p.vertices):
        n = v / np.linalg.norm(v)
        marks = [v + alpha * (p.vertices[j] - v) for j in p.neighbors[i]]
        planes.append(Plane(n, float(np.mean([n @ m for m in marks]))))
    return planes


def vertex_truncate(p: Polyhedron, alpha: float, tol: Tolerance = DEFAULT_TOL) -> Polyhedron:
    if not 0.0 < alpha < 1.0:
        raise DepthOutOfRange(f"vertex truncation depth must lie in (0, 1), got {alpha}")
    return clip_all(p, vertex_planes(p, alpha), tol)


def _inward(p: Polyhedron, face: int, a: int, b: int) -> np.ndarray:
    """Unit vector in the face plane, perpendicular to edge ab, pointing into the face."""
    n = p.face_planes[face].normal
    e = p.vertices[b] - p.vertices[a]
    u = np.cross(n, e)
    u /= np.linalg.norm(u)
    if u @ (p.vertices[list(p.faces[face])].mean(axis=0) - p.vertices[a]) < 0:
        u = -u
    return u


def edge_cut_plane(p: Polyhedron, edge: tuple[int, int], beta: float) -> Plane:
    """Plane through the two in-face lines parallel to ``edge`` at depth ``beta``.

    ``beta`` is an absolute distance, measured in each adjacent face
    perpendicular to the edge.
    """
    a, b = min(edge), max(edge)
    faces = p.edge_faces.get((a, b))
    if faces is None or len(faces) != 2:
        raise ValueError(f"{edge} is not an edge of the solid")
    if beta < 0.0:
        raise DepthOutOfRange(f"edge depth must be non-negative, got {beta}")
    mid = 0.5 * (p.vertices[a] + p.vertices[b])
    points = []
    for f in faces:
        u = _inward(p, f, a, b)
        reach = max(float(u @ (p.vertices[k] - mid)) for k in p.faces[f])
        if beta >= reach:
            raise DepthOutOfRange(f"depth {beta} leaves face {f} (reach {reach:.6g})")
        points.append(mid + beta * u)
    e = p.vertices[b] - p.vertices[a]
    gap = points[1] - points[0]
    if np.linalg.norm(gap) > 1e-12:
        n = np.cross(e, gap)
    else:
        n = p.face_planes[faces[0]].normal + p.face_planes[faces[1]].normal
    if n @ (mid - p.centroid) < 0:
        n = -n
    return Plane.through(n, 0.5 * (points[0] + points[1]))


def vertex_edge_truncate(
    p: Polyhedron, params: TruncationParams, tol: Tolerance = DEFAULT_TOL
) -> Polyhedron:
    """Cut every vertex at depth ``r1`` and every edge at depth ``r2`` at once."""
    length = edge_length(p)
    planes = vertex_planes(p, params.r1)
    if params.r2 > 0.0:
        planes += [edge_cut_plane(p, e, params.r2 * length) for e in p.edges]
    out = clip_all(p, planes, tol)
    if params.mode is not None:
        from polycut.verify import face_regularity

        dev_len, dev_ang = face_regularity(out)
        if max(dev_len, dev_ang) > tol.verify:
            raise InconsistentParams(
                f"{params.mode} params left irregular faces ({dev_len:.3g}, {dev_ang:.3g})"
            )
    return out


def derived_lengths(params: TruncationParams, theta: float) -> DerivedLengths:
    r1, r2 = params.r1, params.r2
    return DerivedLengths(
        l1=r1 - 4.0 / SQRT3 * r2,
        l2=1.0 - 2.0 * r1 + 2.0 / SQRT3 * r2,
        l3=r2 * math.sqrt(2.0) * math.sqrt(1.0 - math.cos(theta)),
    )


def solve_ve_params(theta: float, mode: Literal["expand", "omnitruncate"]) -> TruncationParams:
    """Solve for (r1, r2) making the combined truncation of a triangle-faced seed uniform.

    ``omnitruncate`` imposes l1 = l2 and l1 = l3; ``expand`` collapses the
    vertex-cut side (l1 = 0) and imposes l2 = l3.  Every l is linear in
    (r1, r2), so each mode is a 2x2 linear system.
    """
    if not 0.0 < theta < math.pi:
        raise ValueError(f"dihedral angle must lie in (0, pi), got {theta}")
    c = math.sqrt(2.0) * math.sqrt(1.0 - math.cos(theta))
    # rows are coefficients of (r1, r2) and the constant, from l1, l2, l3
    l1 = np.array([1.0, -4.0 / SQRT3, 0.0])
    l2 = np.array([-2.0, 2.0 / SQRT3, 1.0])
    l3 = np.array([0.0, c, 0.0])
    if mode == "omnitruncate":
        rows = [l1 - l2, l1 - l3]
    elif mode == "expand":
        rows = [l1, l2 - l3]
    else:
        raise ValueError(f"unknown mode {mode!r}")
    a = np.array([r[:2] for r in rows])
    rhs = -np.array([r[2] for r in rows])
    if abs(np.linalg.det(a)) < 1e-12:
        raise SingularSystem(f"degenerate system for theta={theta}")
    r1, r2 = np.linalg.solve(a, rhs)
    return TruncationParams(float(r1), float(r2), mode)


def snub_cubic(r: float, alpha_deg: float) -> float:
    return ((r - 1.0) * r - 1.0) * r - 1.0 + 2.0 * math.cos(math.radians(alpha_deg))


def snub_ratio(alpha_deg: float, lo: float = 1.0, hi: float = 3.0) -> float:
    """Root of r^3 - r^2 - r - 1 + 2 cos(alpha) in (lo, hi) by safeguarded Newton."""
    f_lo, f_hi = snub_cubic(lo, alpha_deg), snub_cubic(hi, alpha_deg)
    if f_lo * f_hi > 0.0:
        raise NoRootInBracket(f"no sign change on ({lo}, {hi}) for alpha={alpha_deg}")
    if f_lo == 0.0:
        return lo
    r = 0.5 * (lo + hi)
    for _ in range(200):
        f = snub_cubic(r, alpha_deg)
        if f == 0.0:
            return r
        if (f < 0.0) == (f_lo < 0.0):
            lo = r
        else:
            hi = r
        slope = (3.0 * r - 2.0) * r - 1.0
        step = r - f / slope if slope != 0.0 else lo - 1.0
        nxt = step if lo < step < hi else 0.5 * (lo + hi)
        if abs(nxt - r) <= 1e-16 * max(1.0, abs(r)):
            return nxt
        r = nxt
    return r


def _line_meet(p1, d1, p2, d2) -> np.ndarray:
    """Intersection of two coplanar lines, via least squares on the parameters."""
    s, *_ = np.linalg.lstsq(np.column_stack((d1, -d2)), p2 - p1, rcond=None)
    return p1 + s[0] * d1


def rotated_triangles(p: Polyhedron, spec: SnubSpec) -> dict[int, np.ndarray]:
    """Per triangular face, the inner triangle cut out by the three cevians.

    Each edge, directed counterclockwise (left) or clockwise (right) round the
    face seen from outside, is divided longer:shorter = ratio:1, and the
    division point is joined to the opposite corner.
    """
    t = spec.ratio / (1.0 + spec.ratio)
    out = {}
    for fi, face in enumerate(p.faces):
        if len(face) != 3:
            raise ValueError("skew truncation needs a triangle-faced seed")
        corners = [p.vertices[i] for i in (face if spec.chirality == "left" else face[::-1])]
        cevians = []
        for k in range(3):
            a, b, opposite = corners[k], corners[(k + 1) % 3], corners[(k + 2) % 3]
            mark = a + t * (b - a)
            cevians.append((mark, opposite - mark))
        out[fi] = np.array(
            [_line_meet(*cevians[k], *cevians[(k + 1) % 3]) for k in range(3)]
        )
    return out


def skew_planes(p: Polyhedron, spec: SnubSpec, candidate: int = 0) -> list[Plane]:
    """Cutting planes of the skew truncation.

    For each face and each of its edges: the plane through the inner-triangle
    side nearest that edge and one inner-triangle corner of the face across
    the edge (``candidate`` ranks those corners by distance to the edge
    midpoint).  For each seed vertex: the plane through the inner-triangle
    corners nearest it.
    """
    tri = rotated_triangles(p, spec)
    centre = p.centroid
    planes = []
    for fi, face in enumerate(p.faces):
        inner = tri[fi]
        for a, b in zip(face, face[1:] + face[:1]):
            mid = 0.5 * (p.vertices[a] + p.vertices[b])
            (other,) = [g for g in p.edge_faces[(min(a, b), max(a, b))] if g != fi]
            k = min(range(3), key=lambda j: np.linalg.norm(0.5 * (inner[j] + inner[(j + 1) % 3]) - mid))
            s0, s1 = inner[k], inner[(k + 1) % 3]
            across = sorted(tri[other], key=lambda q: np.linalg.norm(q - mid))[candidate]
            n = np.cross(s1 - s0, across - s0)
            if n @ (s0 - centre) < 0:
                n = -n
            planes.append(Plane.through(n, s0))
    for vi, v in enumerate(p.vertices):
        near = [
            min(tri[fi], key=lambda q: np.linalg.norm(q - v))
            for fi, face in enumerate(p.faces)
            if vi in face
        ]
        n = v / np.linalg.norm(v)
        planes.append(Plane(n, float(np.mean([n @ q for q in near]))))
    return planes


def skew_truncate(p: Polyhedron, spec: SnubSpec, tol: Tolerance = DEFAULT_TOL) -> Polyhedron:
    """Snub a triangle-faced seed, keeping each face's rotated triangle as a face.

    The pairing of an inner-triangle side with a corner across the edge is
    tried nearest-first; the first candidate whose result is uniform wins.
    """
    from polycut.verify import is_uniform

    for candidate in range(3):
        out = clip_all(p, skew_planes(p, spec, candidate), tol)
        if is_uniform(out, tol):
            return out
    raise NonUniformResult(f"no plane pairing gives a uniform snub for {spec}")
