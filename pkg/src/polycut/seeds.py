"""Seed solids at unit edge length, centred on the origin.

The tetrahedron uses the alternate cube corners (1,1,1), (1,-1,-1), (-1,1,-1),
(-1,-1,1).  The octahedron and icosahedron are placed so that four of their
faces lie in the face planes of an origin-centred tetrahedron of that same
orientation; :func:`host_tetrahedron` recovers that tetrahedron.
"""

from __future__ import annotations

import math

import numpy as np
from scipy.spatial import ConvexHull

from polycut.geometry import DEFAULT_TOL, Polyhedron, Tolerance, canonicalize

PHI = (1.0 + math.sqrt(5.0)) / 2.0

TETRA_CORNERS = np.array([[1, 1, 1], [1, -1, -1], [-1, 1, -1], [-1, -1, 1]], dtype=float)
# outward face normals of the tetrahedron: each face is opposite one corner
TETRA_NORMALS = -TETRA_CORNERS / math.sqrt(3.0)


def _hull(points) -> Polyhedron:
    pts = np.asarray(points, dtype=float)
    simplices = ConvexHull(pts).simplices
    return canonicalize(pts, simplices.tolist(), DEFAULT_TOL)


def tetrahedron(edge: float = 1.0) -> Polyhedron:
    """Regular tetrahedron; face planes are ``-(+-x+-y+-z) <= edge / (2*sqrt(6))``."""
    return _hull(TETRA_CORNERS * (edge / (2.0 * math.sqrt(2.0))))


def octahedron_in_T() -> Polyhedron:
    """Unit-edge octahedron sitting on the edge midpoints of ``tetrahedron(2)``."""
    pts = np.vstack([np.eye(3), -np.eye(3)]) / math.sqrt(2.0)
    return _hull(pts)


def icosahedron_in_T(mirror: bool = False) -> Polyhedron:
    """Unit-edge icosahedron whose vertices divide the octahedron's edges in ratio phi:1.

    The default orientation puts the division point nearer the start of each
    counterclockwise-directed octahedron edge; ``mirror=True`` gives the other.
    Eight faces lie in the octahedron's face planes, four of them in the
    host tetrahedron's.
    """
    a, b = (PHI, 1.0) if mirror else (1.0, PHI)
    pts = []
    for s1 in (1.0, -1.0):
        for s2 in (1.0, -1.0):
            base = np.array([0.0, s1 * a, s2 * b])
            pts.extend(np.roll(base, k) for k in range(3))
    return _hull(np.array(pts) / 2.0)


def cube(edge: float = 1.0) -> Polyhedron:
    corners = [[x, y, z] for x in (-1, 1) for y in (-1, 1) for z in (-1, 1)]
    return _hull(np.array(corners, dtype=float) * edge / 2.0)


def dodecahedron() -> Polyhedron:
    pts = [[x, y, z] for x in (-1, 1) for y in (-1, 1) for z in (-1, 1)]
    for s1 in (-1, 1):
        for s2 in (-1, 1):
            base = np.array([0.0, s1 / PHI, s2 * PHI])
            pts.extend(np.roll(base, k) for k in range(3))
    # edge of this standard dodecahedron is 2/phi
    return _hull(np.array(pts, dtype=float) * PHI / 2.0)


def _ring(n: int, radius: float, z: float, phase: float = 0.0) -> np.ndarray:
    t = phase + 2.0 * math.pi * np.arange(n) / n
    return np.column_stack((radius * np.cos(t), radius * np.sin(t), np.full(n, z)))


def prism(n: int) -> Polyhedron:
    if n < 3:
        raise ValueError("prism needs n >= 3")
    r = 1.0 / (2.0 * math.sin(math.pi / n))
    return _hull(np.vstack([_ring(n, r, 0.5), _ring(n, r, -0.5)]))


def antiprism(n: int) -> Polyhedron:
    """Uniform antiprism; the ring gap is solved so the side triangles are equilateral."""
    if n < 3:
        raise ValueError("antiprism needs n >= 3")
    r = 1.0 / (2.0 * math.sin(math.pi / n))
    # lateral edge^2 = 2r^2(1 - cos(pi/n)) + h^2 = 1
    h = math.sqrt(1.0 - 2.0 * r * r * (1.0 - math.cos(math.pi / n)))
    return _hull(np.vstack([_ring(n, r, h / 2.0), _ring(n, r, -h / 2.0, math.pi / n)]))


def host_tetrahedron(p: Polyhedron, tol: Tolerance = DEFAULT_TOL) -> Polyhedron:
    """Smallest tetrahedron of the standard orientation, centred on the origin, containing ``p``.

    Raises ValueError when ``p`` is not tetrahedrally balanced about the origin,
    i.e. its support values in the four face directions differ.
    """
    support = (p.vertices @ TETRA_NORMALS.T).max(axis=0)
    if np.ptp(support) > tol.coplanar:
        raise ValueError(f"support values differ by {np.ptp(support):.3g}")
    return tetrahedron(2.0 * math.sqrt(6.0) * float(support.mean()))
