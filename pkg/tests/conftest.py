from __future__ import annotations

from collections import Counter

import numpy as np
import pytest
from scipy.spatial import ConvexHull
from scipy.spatial.transform import Rotation

from polycut import seeds


def hull_signature(vertices) -> tuple[int, int, int, dict[int, int]]:
    """Independent V/E/F/census count: scipy hull facets merged by supporting plane."""
    hull = ConvexHull(np.asarray(vertices))
    planes: list[tuple[np.ndarray, set[int]]] = []
    for simplex, eq in zip(hull.simplices, hull.equations):
        for key, members in planes:
            if np.allclose(key, eq, atol=1e-7):
                members.update(simplex.tolist())
                break
        else:
            planes.append((eq, set(simplex.tolist())))
    v = len(hull.vertices)
    f = len(planes)
    census = Counter(len(m) for _, m in planes)
    return v, v + f - 2, f, dict(census)


def random_rotations(n: int, seed: int) -> np.ndarray:
    return Rotation.random(n, random_state=seed).as_matrix()


SEED_BUILDERS = {
    "T": seeds.tetrahedron,
    "O": seeds.octahedron_in_T,
    "I": seeds.icosahedron_in_T,
    "C": seeds.cube,
    "D": seeds.dodecahedron,
    "P5": lambda: seeds.prism(5),
    "A5": lambda: seeds.antiprism(5),
}


@pytest.fixture(scope="session")
def seed_solids():
    return {name: make() for name, make in SEED_BUILDERS.items()}
