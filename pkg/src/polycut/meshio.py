"""Wavefront OBJ and JSON mesh files.

OBJ: ``v x y z`` lines, then ``f i j k ...`` lines with 1-based indices in
counterclockwise-from-outside order.  JSON: ``{"name", "vertices", "faces"}``
with 0-based indices.
"""

from __future__ import annotations

import json
from pathlib import Path

from polycut.errors import MeshFormatError
from polycut.geometry import Polyhedron


def _fmt(x: float) -> str:
    return f"{x:.17g}"


def obj_text(p: Polyhedron, name: str | None = None) -> str:
    lines = [f"o {name}"] if name else []
    lines += [f"v {_fmt(x)} {_fmt(y)} {_fmt(z)}" for x, y, z in p.vertices]
    lines += ["f " + " ".join(str(i + 1) for i in face) for face in p.faces]
    return "\n".join(lines) + "\n"


def export_obj(p: Polyhedron, path, name: str | None = None) -> None:
    Path(path).write_text(obj_text(p, name))


def import_obj(path) -> Polyhedron:
    verts, faces = [], []
    for lineno, line in enumerate(Path(path).read_text().splitlines(), 1):
        parts = line.split()
        if not parts or parts[0] in ("#", "o", "g", "s"):
            continue
        try:
            if parts[0] == "v":
                if len(parts) < 4:
                    raise ValueError("vertex needs three coordinates")
                verts.append([float(c) for c in parts[1:4]])
            elif parts[0] == "f":
                faces.append([int(tok.split("/")[0]) - 1 for tok in parts[1:]])
        except ValueError as exc:
            raise MeshFormatError(f"{path}:{lineno}: {exc}") from exc
    _check_faces(faces, len(verts), str(path))
    return Polyhedron.from_faces(verts, faces)


def json_text(p: Polyhedron, name: str = "") -> str:
    doc = {
        "name": name,
        "vertices": [[float(c) for c in v] for v in p.vertices],
        "faces": [list(f) for f in p.faces],
    }
    return json.dumps(doc, indent=1) + "\n"


def export_json(p: Polyhedron, path, name: str = "") -> None:
    Path(path).write_text(json_text(p, name))


def import_json(path) -> Polyhedron:
    text = Path(path).read_text()
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise MeshFormatError(f"{path}:{exc.lineno}:{exc.colno}: {exc.msg}") from exc
    if not isinstance(doc, dict) or "vertices" not in doc or "faces" not in doc:
        raise MeshFormatError(f"{path}: expected an object with 'vertices' and 'faces'")
    verts = doc["vertices"]
    for i, v in enumerate(verts):
        if not (isinstance(v, list) and len(v) == 3 and all(isinstance(c, (int, float)) for c in v)):
            raise MeshFormatError(f"{path}: vertices[{i}] is not a coordinate triple")
    faces = doc["faces"]
    for i, f in enumerate(faces):
        if not isinstance(f, list) or not all(isinstance(k, int) for k in f):
            raise MeshFormatError(f"{path}: faces[{i}] is not a list of integers")
    _check_faces(faces, len(verts), str(path))
    return Polyhedron.from_faces(verts, faces)


def _check_faces(faces, nverts: int, where: str) -> None:
    for i, face in enumerate(faces):
        if len(face) < 3:
            raise MeshFormatError(f"{where}: faces[{i}] has fewer than 3 vertices")
        for j, k in enumerate(face):
            if not 0 <= k < nverts:
                raise MeshFormatError(f"{where}: faces[{i}][{j}] = {k} is out of range")
