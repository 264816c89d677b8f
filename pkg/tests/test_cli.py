import json
import math
import os

import pytest

from maxfaces.cli import build_parser, family_from_args, main
from maxfaces.export import GridSpec, parse_grid, read_obj_vertices, sample_grid, write_obj
from maxfaces.families import Bonnet, Lambda, Theta


def run_cli(argv):
    return main(argv)


def test_parse_grid():
    g = parse_grid("-2:2:81,-3.2:3.2:129")
    assert (g.u_min, g.u_max, g.nu) == (-2.0, 2.0, 81)
    assert (g.v_min, g.v_max, g.nv) == (-3.2, 3.2, 129)
    with pytest.raises(ValueError):
        parse_grid("1:2")
    with pytest.raises(ValueError):
        GridSpec(0, 0, 0, 1, 4, 4)
    with pytest.raises(ValueError):
        GridSpec(0, 1, 0, 1, 1, 4)


def test_theta_snaps_to_enneper_chart():
    args = build_parser().parse_args(
        ["surface", "--family", "theta", "--theta", "0.7854", "--grid", "0:1:2,0:1:2", "--out", "x.obj"]
    )
    fam = family_from_args(args)
    assert fam.tag() == "E"
    assert fam.theta == math.pi / 4


def test_surface_obj_contract(tmp_path):
    out = tmp_path / "bl.obj"
    code = run_cli(
        [
            "surface",
            "--family",
            "bonnet",
            "--t",
            "1.0",
            "--grid",
            "-2:2:81,-3.2:3.2:129",
            "--out",
            str(out),
        ]
    )
    assert code == 0
    verts = read_obj_vertices(str(out))
    assert 0 < len(verts) <= 81 * 129
    with open(out, encoding="utf-8") as fh:
        for line in fh:
            assert line.startswith(("v ", "f "))


def test_surface_vertex_value(tmp_path):
    out = tmp_path / "lam.obj"
    code = run_cli(
        ["surface", "--family", "lambda", "--arg", "0", "--grid", "0:2:3,-1:1:3", "--out", str(out)]
    )
    assert code == 0
    verts = read_obj_vertices(str(out))
    target = (2.0 / 3.0, 0.0, -1.0 / 3.0)  # X(1, 0)
    assert any(
        all(abs(a - b) < 1e-6 for a, b in zip(vert, target)) for vert in verts
    )


def test_obj_roundtrip_precision(tmp_path):
    fam = Theta(0.3)
    grid = parse_grid("-1:1:9,-1:1:9")
    verts = sample_grid(fam, grid)
    path = tmp_path / "s.obj"
    write_obj(str(path), verts, grid.nu, grid.nv)
    back = read_obj_vertices(str(path))
    assert len(back) == len([v for v in verts if v is not None])
    for orig, rt in zip((v for v in verts if v is not None), back):
        for a, b in zip(orig.as_tuple(), rt):
            assert abs(a - b) <= 1e-8 * max(1.0, abs(a))  # 9 significant digits


def test_surface_rejects_bad_parameter(tmp_path):
    code = run_cli(
        ["surface", "--family", "cat_light", "--delta", "7", "--grid", "0:1:4,0:1:4", "--out", str(tmp_path / "x.obj")]
    )
    assert code == 2


def test_singular_counts_json(tmp_path):
    base = tmp_path / "sing"
    code = run_cli(["singular", "--family", "bonnet", "--t", "1.0", "--out", str(base)])
    assert code == 0
    summary = json.loads((tmp_path / "sing.json").read_text())
    assert summary["counts"] == {"sw": 1, "ccr": 2, "cs": 0}
    rows = (tmp_path / "sing.csv").read_text().splitlines()
    assert rows[0].split(",")[:3] == ["u", "v", "class"]
    # swallowtail row at (log 2, 0)
    found = False
    for row in rows[1:]:
        parts = row.split(",")
        if parts[2] == "swallowtail" and abs(float(parts[0]) - math.log(2.0)) < 1e-6:
            v = float(parts[1])
            assert min(abs(v), abs(2.0 * math.pi - v)) < 1e-6
            found = True
    assert found


def test_singular_snaps_t(tmp_path):
    base = tmp_path / "s2"
    code = run_cli(["singular", "--family", "bonnet", "--t", "0.707107", "--out", str(base)])
    assert code == 0
    summary = json.loads((tmp_path / "s2.json").read_text())
    assert summary["counts"] == {"sw": 2, "ccr": 0, "cs": 2}


def test_deform_manifest(tmp_path):
    out = tmp_path / "frames"
    code = run_cli(
        [
            "deform",
            "--stage",
            "theta_sweep",
            "--frames",
            "5",
            "--grid",
            "-1:1:7,-1:1:7",
            "--out-dir",
            str(out),
        ]
    )
    assert code == 0
    manifest = json.loads((out / "manifest.json").read_text())
    assert manifest["n_frames"] == 5
    tags = [f["family"]["tag"] for f in manifest["frames"]]
    assert tags == ["C_S", "E", "B_L", "B_T", "C_T"]
    params = [f["parameter"] for f in manifest["frames"]]
    assert all(b < a for a, b in zip(params, params[1:]))  # strictly monotone
    assert sorted(os.listdir(out)) == [
        "frame_0000.obj",
        "frame_0001.obj",
        "frame_0002.obj",
        "frame_0003.obj",
        "frame_0004.obj",
        "manifest.json",
    ]


def test_associated_loop_endpoints(tmp_path):
    out = tmp_path / "loop"
    code = run_cli(
        ["deform", "--stage", "associated_loop", "--frames", "5", "--grid", "0.5:1.5:5,-1:1:5", "--out-dir", str(out)]
    )
    assert code == 0
    first = read_obj_vertices(str(out / "frame_0000.obj"))
    mid = read_obj_vertices(str(out / "frame_0002.obj"))
    last = read_obj_vertices(str(out / "frame_0004.obj"))
    # loop closure, and point reflection halfway through
    for a, b in zip(first, last):
        assert all(abs(x - y) < 1e-9 for x, y in zip(a, b))
    for a, b in zip(first, mid):
        assert all(abs(x + y) < 1e-9 for x, y in zip(a, b))


def test_verify_single_check(tmp_path):
    out = tmp_path / "rep.json"
    code = run_cli(
        ["verify", "--family", "bonnet", "--t", "1.0", "--check", "gauss", "--out", str(out)]
    )
    assert code == 0
    rep = json.loads(out.read_text())
    assert rep["n_checks"] == 1
    assert rep["checks"][0]["name"] == "gauss"
    assert rep["checks"][0]["max_residual"] < 1e-10


def test_verify_unknown_check_is_usage_error(tmp_path):
    code = run_cli(["verify", "--check", "nonsense", "--out", str(tmp_path / "r.json")])
    assert code == 2


def test_verify_deterministic_and_green(tmp_path):
    a, b = tmp_path / "a.json", tmp_path / "b.json"
    assert run_cli(["verify", "--all", "--out", str(a)]) == 0
    assert run_cli(["verify", "--all", "--out", str(b)]) == 0
    assert a.read_bytes() == b.read_bytes()


def test_verify_detects_injected_sign_flip(tmp_path, monkeypatch):
    # negative control: flip the sign of eta in one data route only;
    # the cross-route consistency checks must fail and exit nonzero
    original = Bonnet._jet_base

    def flipped(self, z):
        h, h_z, h_zz, eta, eta_z = original(self, z)
        return (h, h_z, h_zz, -eta, -eta_z)

    monkeypatch.setattr(Bonnet, "_jet_base", flipped)
    out = tmp_path / "bug.json"
    code = run_cli(["verify", "--family", "bonnet", "--t", "1.0", "--out", str(out)])
    assert code == 1
    rep = json.loads(out.read_text())
    failed = {c["name"] for c in rep["checks"] if not c["passed"]}
    assert "weierstrass" in failed
