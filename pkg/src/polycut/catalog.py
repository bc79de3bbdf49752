"""Named construction recipes.

Embeddable solids (O, I and the Archimedean ones) are built from seeds that
have been scaled into the unit-edge tetrahedron ``build("T")``, so every one of
them comes out in the same coordinates and can be compared directly.
"""

from __future__ import annotations

import math
import re
import threading
from collections import Counter
from dataclasses import dataclass

from polycut import seeds
from polycut.geometry import Polyhedron
from polycut.truncation import (
    SnubSpec,
    TruncationParams,
    skew_truncate,
    solve_ve_params,
    vertex_edge_truncate,
    vertex_truncate,
)

PHI = seeds.PHI
THETA_O = math.acos(-1.0 / 3.0)
THETA_I = math.acos(-math.sqrt(5.0) / 3.0)

PLATONIC = ("T", "C", "O", "D", "I")
ARCHIMEDEAN = ("tT", "tC", "tO", "tD", "tI", "CO", "ID", "eO", "eI", "tCO", "tID", "sC", "sD")
EMBEDDABLE = ("O", "I") + ARCHIMEDEAN

# the cube's face diagonal sqrt2 and the dodecahedron's phi set these depths
TC_DEPTH = (2.0 + math.sqrt(2.0)) / (3.0 + 2.0 * math.sqrt(2.0))
TD_DEPTH = (2.0 + PHI) / (3.0 + 2.0 * PHI)

FULL_NAMES = {
    "T": "tetrahedron",
    "C": "cube",
    "O": "octahedron",
    "D": "dodecahedron",
    "I": "icosahedron",
    "tT": "truncated tetrahedron",
    "tC": "truncated cube",
    "tO": "truncated octahedron",
    "tD": "truncated dodecahedron",
    "tI": "truncated icosahedron",
    "CO": "cuboctahedron",
    "ID": "icosidodecahedron",
    "eO": "rhombicuboctahedron",
    "eI": "rhombicosidodecahedron",
    "tCO": "truncated cuboctahedron",
    "tID": "truncated icosidodecahedron",
    "sC": "snub cube",
    "sD": "snub dodecahedron",
}

# face census (sides -> count) of each named solid
CENSUS = {
    "T": {3: 4},
    "C": {4: 6},
    "O": {3: 8},
    "D": {5: 12},
    "I": {3: 20},
    "tT": {3: 4, 6: 4},
    "tC": {3: 8, 8: 6},
    "tO": {4: 6, 6: 8},
    "tD": {3: 20, 10: 12},
    "tI": {5: 12, 6: 20},
    "CO": {3: 8, 4: 6},
    "ID": {3: 20, 5: 12},
    "eO": {3: 8, 4: 18},
    "eI": {3: 20, 4: 30, 5: 12},
    "tCO": {4: 12, 6: 8, 8: 6},
    "tID": {4: 30, 6: 20, 10: 12},
    "sC": {3: 32, 4: 6},
    "sD": {3: 80, 5: 12},
}

_FAMILY = re.compile(r"^([PA])(\d+)$")


@dataclass(frozen=True)
class Signature:
    V: int
    E: int
    F: int
    face_census: tuple[tuple[int, int], ...]

    def census(self) -> dict[int, int]:
        return dict(self.face_census)


def signature(p: Polyhedron) -> Signature:
    census = Counter(len(f) for f in p.faces)
    return Signature(len(p.vertices), len(p.edges), len(p.faces), tuple(sorted(census.items())))


def expected_census(name: str) -> dict[int, int]:
    if name in CENSUS:
        return dict(CENSUS[name])
    m = _FAMILY.match(name)
    if not m or int(m.group(2)) < 3:
        raise KeyError(f"unknown solid {name!r}")
    n = int(m.group(2))
    side = 4 if m.group(1) == "P" else 3
    count = n if side == 4 else 2 * n
    if n == side:
        return {side: count + 2}
    return {side: count, n: 2}


def known_names(nmax: int = 50) -> list[str]:
    names = list(PLATONIC + ARCHIMEDEAN)
    names += [f"P{n}" for n in range(3, nmax + 1)] + [f"A{n}" for n in range(3, nmax + 1)]
    return names


def is_valid_name(name: str) -> bool:
    if name in FULL_NAMES:
        return True
    m = _FAMILY.match(name)
    return bool(m) and int(m.group(2)) >= 3


def _in_unit_T(p: Polyhedron) -> Polyhedron:
    return p.scaled(1.0 / seeds.host_tetrahedron(p).edge_lengths().mean())


def _octahedron() -> Polyhedron:
    return _in_unit_T(seeds.octahedron_in_T())


def _icosahedron() -> Polyhedron:
    return _in_unit_T(seeds.icosahedron_in_T())


def _construct(name: str) -> Polyhedron:
    m = _FAMILY.match(name)
    if m:
        n = int(m.group(2))
        return seeds.prism(n) if m.group(1) == "P" else seeds.antiprism(n)
    recipes = {
        "T": lambda: seeds.tetrahedron(),
        "C": lambda: seeds.cube(),
        "D": lambda: seeds.dodecahedron(),
        "O": _octahedron,
        "I": _icosahedron,
        "tT": lambda: vertex_truncate(seeds.tetrahedron(), 1.0 / 3.0),
        "tO": lambda: vertex_truncate(_octahedron(), 1.0 / 3.0),
        "tI": lambda: vertex_truncate(_icosahedron(), 1.0 / 3.0),
        "CO": lambda: vertex_truncate(_octahedron(), 0.5),
        "ID": lambda: vertex_truncate(_icosahedron(), 0.5),
        "tC": lambda: vertex_truncate(_octahedron(), TC_DEPTH),
        "tD": lambda: vertex_truncate(_icosahedron(), TD_DEPTH),
        "eO": lambda: vertex_edge_truncate(_octahedron(), solve_ve_params(THETA_O, "expand")),
        "tCO": lambda: vertex_edge_truncate(_octahedron(), solve_ve_params(THETA_O, "omnitruncate")),
        "eI": lambda: vertex_edge_truncate(_icosahedron(), solve_ve_params(THETA_I, "expand")),
        "tID": lambda: vertex_edge_truncate(_icosahedron(), solve_ve_params(THETA_I, "omnitruncate")),
        "sC": lambda: skew_truncate(_octahedron(), SnubSpec.for_angle(90.0)),
        "sD": lambda: skew_truncate(_icosahedron(), SnubSpec.for_angle(108.0)),
    }
    if name not in recipes:
        raise KeyError(f"unknown solid {name!r}")
    return recipes[name]()


_cache: dict[str, Polyhedron] = {}
_lock = threading.Lock()


def build(name: str) -> Polyhedron:
    """Construct the named solid (cached; results are immutable)."""
    if not is_valid_name(name):
        raise KeyError(f"unknown solid {name!r}")
    with _lock:
        hit = _cache.get(name)
    if hit is not None:
        return hit
    p = _construct(name)
    with _lock:
        return _cache.setdefault(name, p)


def params_for(name: str) -> TruncationParams | SnubSpec | float | None:
    """The construction parameter behind ``name``: depth, (r1, r2) pair or snub spec."""
    table = {
        "tT": 1.0 / 3.0,
        "tO": 1.0 / 3.0,
        "tI": 1.0 / 3.0,
        "CO": 0.5,
        "ID": 0.5,
        "tC": TC_DEPTH,
        "tD": TD_DEPTH,
    }
    if name in table:
        return table[name]
    if name in ("eO", "tCO"):
        return solve_ve_params(THETA_O, "expand" if name == "eO" else "omnitruncate")
    if name in ("eI", "tID"):
        return solve_ve_params(THETA_I, "expand" if name == "eI" else "omnitruncate")
    if name == "sC":
        return SnubSpec.for_angle(90.0)
    if name == "sD":
        return SnubSpec.for_angle(108.0)
    return None
