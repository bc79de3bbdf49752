from __future__ import annotations

import json

import numpy as np
import pytest

from polycut import catalog, cli, meshio
from polycut.errors import MeshFormatError

NAMES = list(catalog.PLATONIC + catalog.ARCHIMEDEAN) + ["P7", "A9"]


@pytest.mark.parametrize("name", NAMES)
@pytest.mark.parametrize("fmt", ["obj", "json"])
def test_round_trip(tmp_path, name, fmt):
    p = catalog.build(name)
    path = tmp_path / f"{name}.{fmt}"
    if fmt == "obj":
        meshio.export_obj(p, path, name)
        q = meshio.import_obj(path)
    else:
        meshio.export_json(p, path, name)
        q = meshio.import_json(path)
    assert catalog.signature(q) == catalog.signature(p)
    assert np.array_equal(q.vertices, p.vertices)
    assert q.faces == p.faces


def test_obj_layout():
    text = meshio.obj_text(catalog.build("T"), "T")
    lines = text.splitlines()
    assert lines[0] == "o T"
    assert sum(line.startswith("v ") for line in lines) == 4
    faces = [[int(tok) for tok in line.split()[1:]] for line in lines if line.startswith("f ")]
    assert len(faces) == 4
    assert sorted({i for f in faces for i in f}) == [1, 2, 3, 4]


def test_obj_accepts_texture_indices(tmp_path):
    path = tmp_path / "t.obj"
    src = meshio.obj_text(catalog.build("T"))
    path.write_text("# comment\n" + "\n".join(
        " ".join(tok + "/1" if line.startswith("f ") and i else tok for i, tok in enumerate(line.split()))
        for line in src.splitlines()
    ))
    assert catalog.signature(meshio.import_obj(path)) == catalog.signature(catalog.build("T"))


def test_obj_errors_report_line(tmp_path):
    path = tmp_path / "bad.obj"
    path.write_text("v 0 0 0\nv 1 0 x\n")
    with pytest.raises(MeshFormatError, match=r"bad.obj:2"):
        meshio.import_obj(path)
    path.write_text("v 0 0 0\nv 1 0 0\nv 0 1 0\nf 1 2 9\n")
    with pytest.raises(MeshFormatError, match=r"faces\[0\]\[2\] = 8 is out of range"):
        meshio.import_obj(path)


def test_json_errors(tmp_path):
    path = tmp_path / "bad.json"
    path.write_text('{"vertices": [[0, 0, 0]],\n "faces": [[0, 1')
    with pytest.raises(MeshFormatError, match=r"bad.json:2:"):
        meshio.import_json(path)
    path.write_text(json.dumps({"vertices": [[0, 0]], "faces": []}))
    with pytest.raises(MeshFormatError, match=r"vertices\[0\]"):
        meshio.import_json(path)
    path.write_text(json.dumps({"vertices": [[0, 0, 0]] * 3, "faces": [[0, 1]]}))
    with pytest.raises(MeshFormatError, match="fewer than 3"):
        meshio.import_json(path)
    path.write_text(json.dumps([1, 2]))
    with pytest.raises(MeshFormatError):
        meshio.import_json(path)


class TestCli:
    def test_build_obj(self, tmp_path):
        out = tmp_path / "tco.obj"
        assert cli.run(["build", "tCO", "--out", str(out)]) == 0
        lines = out.read_text().splitlines()
        assert sum(line.startswith("v ") for line in lines) == 48
        assert sum(line.startswith("f ") for line in lines) == 26

    def test_build_json_by_suffix(self, tmp_path):
        out = tmp_path / "sc.json"
        assert cli.run(["build", "sC", "--out", str(out)]) == 0
        doc = json.loads(out.read_text())
        assert doc["name"] == "sC" and len(doc["vertices"]) == 24 and len(doc["faces"]) == 38

    def test_build_stdout(self, capsys):
        assert cli.run(["build", "T"]) == 0
        assert capsys.readouterr().out.count("\nv ") == 4

    def test_figure(self, tmp_path):
        assert cli.run(["build", "--figure", "--out", str(tmp_path / "fig")]) == 0
        assert len(list((tmp_path / "fig").glob("*.obj"))) == 16

    @pytest.mark.parametrize(
        "argv",
        [["build", "Q"], ["verify", "P2"], ["build"], ["build", "--figure"], ["theorem", "--nmax", "3"], ["frobnicate"]],
    )
    def test_usage_errors(self, argv):
        assert cli.run(argv) == 2

    @pytest.mark.parametrize("name", ["tI", "C", "A3", "P9"])
    def test_verify_passes(self, name, capsys):
        assert cli.run(["verify", name]) == 0
        assert "result:           PASS" in capsys.readouterr().out

    def test_embed(self, capsys):
        assert cli.run(["embed", "tD"]) == 0
        assert capsys.readouterr().out.strip() == "tD: k=4"
        assert cli.run(["embed", "C"]) == 1

    def test_params(self, capsys):
        assert cli.run(["params", "sC"]) == 0
        assert "1.83928675521416" in capsys.readouterr().out
        assert cli.run(["params", "eO"]) == 0
        out = capsys.readouterr().out
        assert "r1=0.45308183932197" in out and "l2=0.32037724101704" in out

    def test_angles(self, capsys):
        assert cli.run(["angles", "C"]) == 0
        assert capsys.readouterr().out.splitlines() == [
            "1.570796326795 rad  90.00000000 deg",
            "3.141592653590 rad  180.00000000 deg",
        ]

    def test_theorem_small(self, capsys):
        assert cli.run(["theorem", "--nmax", "6"]) == 0
        assert capsys.readouterr().out.splitlines()[-1] == "24/24 rows pass"

    def test_remark(self, capsys):
        assert cli.run(["remark"]) == 0
        out = capsys.readouterr().out
        assert "of which on T's faces: 4" in out
        assert "tI ⊆ tCO: no; tCO ⊆ tI: no" in out
