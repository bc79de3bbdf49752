"""Build the Archimedean solids by cutting seeds inside a regular tetrahedron, and check the cuts."""

from polycut.catalog import build, signature
from polycut.geometry import DEFAULT_TOL, Plane, Polyhedron, Tolerance, canonicalize, clip
from polycut.verify import is_uniform, k_face_embedding, main_theorem_check

__all__ = [
    "DEFAULT_TOL",
    "Plane",
    "Polyhedron",
    "Tolerance",
    "build",
    "canonicalize",
    "clip",
    "is_uniform",
    "k_face_embedding",
    "main_theorem_check",
    "signature",
]
