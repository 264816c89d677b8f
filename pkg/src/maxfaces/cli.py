"""Command-line interface: surface sampling, singularity tables, deformation sweeps, verification.

Exit codes: 0 on success / all checks passed, 1 on check failures or I/O
problems, 2 on usage errors (including family parameters out of range).
"""

from __future__ import annotations

import argparse
import cmath
import json
import math
import os
import sys

from . import singularities as sing
from .deformation import DeformationStage, deformation_family, stage_parameter
from .errors import InvalidFamilyParameter
from .export import GridSpec, parse_grid, sample_grid, write_csv, write_obj
from .families import Bonnet, CatLight, Lambda, PlaneDef, SurfaceFamily, Theta
from .verify import report_json, run_verify

#: CLI-level snapping of family parameters to chart-boundary values, so
#: values given to a few decimals (0.7854, 0.707107, ...) select the
#: intended special member.  The library itself never snaps.
SNAP_TOL = 1e-4

_SNAP_TARGETS = {
    "theta": (-math.pi / 2, -math.pi / 4, 0.0, math.pi / 4, math.pi / 2),
    "psi": (-math.pi / 4, 0.0),
    "delta": (1.0,),
    "t": (1.0 / math.sqrt(2.0), 1.0),
}


def _snap(value: float, kind: str) -> float:
    for target in _SNAP_TARGETS.get(kind, ()):
        if abs(value - target) < SNAP_TOL:
            return target
    return value


def family_from_args(args: argparse.Namespace) -> SurfaceFamily:
    name = args.family
    if name == "theta":
        if args.theta is None:
            raise InvalidFamilyParameter("--theta is required for the theta family")
        return Theta(_snap(args.theta, "theta"))
    if name == "lambda":
        if args.arg is None:
            raise InvalidFamilyParameter("--arg (phase of lambda) is required for the lambda family")
        return Lambda(cmath.exp(1j * args.arg))
    if name == "cat_light":
        if args.delta is None:
            raise InvalidFamilyParameter("--delta is required for the cat_light family")
        return CatLight(_snap(args.delta, "delta"))
    if name == "plane_def":
        if args.psi is None:
            raise InvalidFamilyParameter("--psi is required for the plane_def family")
        return PlaneDef(_snap(args.psi, "psi"))
    if name == "bonnet":
        if args.t is None:
            raise InvalidFamilyParameter("--t is required for the bonnet family")
        return Bonnet(_snap(args.t, "t"))
    raise InvalidFamilyParameter(f"unknown family {name!r}")


def _add_family_flags(p: argparse.ArgumentParser, required: bool = True) -> None:
    p.add_argument(
        "--family",
        choices=("theta", "lambda", "cat_light", "plane_def", "bonnet"),
        required=required,
    )
    p.add_argument("--theta", type=float, help="theta parameter in [-pi/2, pi/2]")
    p.add_argument("--arg", type=float, help="phase of lambda (lambda = exp(i*arg))")
    p.add_argument("--delta", type=float, help="delta parameter in (0, 1]")
    p.add_argument("--psi", type=float, help="psi parameter in [-pi/4, 0]")
    p.add_argument("--t", type=float, help="Bonnet parameter t > 0")


def cmd_surface(args: argparse.Namespace) -> int:
    fam = family_from_args(args)
    grid = parse_grid(args.grid)
    verts = sample_grid(fam, grid)
    n = write_obj(args.out, verts, grid.nu, grid.nv)
    print(f"wrote {args.out}: {n} vertices ({grid.nu}x{grid.nv} grid, family {fam.tag()})")
    return 0


def cmd_singular(args: argparse.Namespace) -> int:
    fam = family_from_args(args)
    if not isinstance(fam, Bonnet):
        raise InvalidFamilyParameter("singular analysis is implemented for --family bonnet")
    special = sing.special_points(fam, n_samples=args.samples)
    sw, ccr, cs = sing.count_per_period(fam, n_samples=args.samples)
    rows = []
    for p in special:
        rows.append(_singular_row(p))
    curves = sing.trace_singular_curve(fam, (0.0, 2.0 * math.pi), n_steps=args.trace_steps)
    for curve in curves:
        for u, v in curve.points:
            crit = sing.criteria_eval(fam.weierstrass_jet, complex(u, v))
            cls = sing.classify_point(crit)
            rows.append(_singular_row(sing.SingularPoint(u, v, cls, crit)))
    rows.sort(key=lambda r: (r[1], r[0]))
    header = [
        "u",
        "v",
        "class",
        "varphi_re",
        "varphi_im",
        "phihat_re",
        "phihat_im",
        "bigphi_re",
        "bigphi_im",
    ]
    write_csv(args.out + ".csv", header, rows)
    summary = {
        "family": fam.describe(),
        "counts": {"sw": sw, "ccr": ccr, "cs": cs},
        "special_points": [
            {"u": p.u, "v": p.v, "class": p.cls.value} for p in special
        ],
    }
    with open(args.out + ".json", "w", encoding="utf-8") as fh:
        json.dump(summary, fh, indent=2)
        fh.write("\n")
    print(f"wrote {args.out}.csv and {args.out}.json: counts sw={sw} ccr={ccr} cs={cs}")
    return 0


def _singular_row(p: sing.SingularPoint) -> list:
    return [
        p.u,
        p.v,
        p.cls.value,
        p.crit.varphi.real,
        p.crit.varphi.imag,
        p.crit.phi_hat.real,
        p.crit.phi_hat.imag,
        p.crit.big_phi.real,
        p.crit.big_phi.imag,
    ]


def cmd_deform(args: argparse.Namespace) -> int:
    try:
        stage = DeformationStage(args.stage)
    except ValueError:
        raise InvalidFamilyParameter(f"unknown stage {args.stage!r}") from None
    if args.frames < 2:
        raise InvalidFamilyParameter("--frames must be at least 2")
    grid = parse_grid(args.grid)
    os.makedirs(args.out_dir, exist_ok=True)
    frames = []
    for k in range(args.frames):
        s = k / (args.frames - 1)
        fam = deformation_family(stage, s)
        path = os.path.join(args.out_dir, f"frame_{k:04d}.obj")
        write_obj(path, sample_grid(fam, grid), grid.nu, grid.nv)
        frames.append(
            {
                "frame": k,
                "stage": stage.value,
                "parameter": stage_parameter(stage, s),
                "family": fam.describe(),
            }
        )
    manifest = {"stage": stage.value, "n_frames": args.frames, "frames": frames}
    with open(os.path.join(args.out_dir, "manifest.json"), "w", encoding="utf-8") as fh:
        json.dump(manifest, fh, indent=2)
        fh.write("\n")
    print(f"wrote {args.frames} frames and manifest.json to {args.out_dir}")
    return 0


def cmd_verify(args: argparse.Namespace) -> int:
    families = None
    if args.family is not None:
        families = [family_from_args(args)]
    checks = args.check if args.check else None
    report = run_verify(families=families, checks=checks)
    text = report_json(report)
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(text + "\n")
    else:
        print(text)
    if args.out:
        status = "pass" if report["all_passed"] else "FAIL"
        print(f"{report['n_passed']}/{report['n_checks']} checks passed -> {status}")
    return 0 if report["all_passed"] else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="maxfaces",
        description="Maximal surfaces with planar curvature lines: sampling, singularities, verification.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_surface = sub.add_parser("surface", help="sample a surface to an OBJ mesh")
    _add_family_flags(p_surface)
    p_surface.add_argument("--grid", required=True, help="umin:umax:nu,vmin:vmax:nv")
    p_surface.add_argument("--out", required=True, help="output OBJ path")
    p_surface.set_defaults(fn=cmd_surface)

    p_sing = sub.add_parser("singular", help="singular curve, criteria values and counts")
    _add_family_flags(p_sing)
    p_sing.add_argument("--out", required=True, help="output base path (writes .csv and .json)")
    p_sing.add_argument("--samples", type=int, default=512, help="curve samples per period")
    p_sing.add_argument("--trace-steps", type=int, default=101, help="v slices for the traced curve")
    p_sing.set_defaults(fn=cmd_singular)

    p_def = sub.add_parser("deform", help="sweep a deformation stage into mesh frames")
    p_def.add_argument("--stage", required=True, choices=[s.value for s in DeformationStage])
    p_def.add_argument("--frames", type=int, required=True)
    p_def.add_argument("--grid", required=True, help="umin:umax:nu,vmin:vmax:nv")
    p_def.add_argument("--out-dir", required=True)
    p_def.set_defaults(fn=cmd_deform)

    p_ver = sub.add_parser("verify", help="run the invariant checks and emit a JSON report")
    p_ver.add_argument("--all", action="store_true", help="verify the standard catalog (default)")
    _add_family_flags(p_ver, required=False)
    p_ver.add_argument("--check", action="append", help="restrict to a named check (repeatable)")
    p_ver.add_argument("--out", help="write the JSON report to a file instead of stdout")
    p_ver.set_defaults(fn=cmd_verify)

    return parser


def _join_grid_flag(argv: list[str]) -> list[str]:
    # grid specs may start with a minus sign; join them onto the flag so
    # argparse does not mistake the value for an option
    out: list[str] = []
    skip = False
    for k, tok in enumerate(argv):
        if skip:
            skip = False
            continue
        if tok == "--grid" and k + 1 < len(argv):
            out.append(f"--grid={argv[k + 1]}")
            skip = True
        else:
            out.append(tok)
    return out


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    if argv is None:
        argv = sys.argv[1:]
    args = parser.parse_args(_join_grid_flag(list(argv)))
    try:
        return args.fn(args)
    except (InvalidFamilyParameter, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except OSError as exc:
        print(f"i/o error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    raise SystemExit(main())
