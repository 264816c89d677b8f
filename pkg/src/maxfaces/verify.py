"""Deterministic invariant checks over the whole catalog.

Every check reports the maximum residual it observed, the tolerance it
enforces and a pass flag.  Identical inputs produce byte-identical JSON:
sampling is seeded, iteration orders are fixed and floats are rendered
by ``repr`` through the json encoder.
"""

from __future__ import annotations

import json
import math
import random

from . import singularities as sing
from .analysis import (
    axial_directions,
    fundamental_form,
    gauss_weingarten_residual,
    mean_curvature_fd,
    planarity_residual,
    unit_normal,
)
from .deformation import DeformationStage, deformation_family
from .errors import PoleError, SingularPointError
from .families import (
    Bonnet,
    CatLight,
    Lambda,
    PlaneDef,
    SurfaceFamily,
    Theta,
    conjugate_data,
    standard_catalog,
)
from .lorentz import minkowski_inner
from .metric import (
    Case1,
    Case2,
    STANDARD_METRIC_FAMILIES,
    eval_rho,
    gauss_residual,
    ode_residuals,
)
from .quadrature import integrate_surface

BONNET_T_SET = (0.5, 1.0 / math.sqrt(2.0), 0.85, 1.0, 2.0)

_SEED = 987654321


# ---------------------------------------------------------------------------
# point sampling
# ---------------------------------------------------------------------------


def _box(fam: SurfaceFamily) -> tuple[float, float, float, float]:
    if isinstance(fam, Theta):
        if fam._chart() == "A":
            return (-1.2, 1.2, 0.25, 1.6)
        return (-1.4, 1.4, -1.4, 1.4)
    if isinstance(fam, Lambda):
        return (0.3, 2.0, -1.4, 1.4)
    if isinstance(fam, CatLight):
        return (-1.4, 1.4, -1.4, 1.4)
    if isinstance(fam, PlaneDef):
        return (-1.2, 1.2, -1.2, 1.2)
    return (-1.8, 1.8, -3.0, 3.0)


def sample_nonsingular(fam: SurfaceFamily, n: int, rng: random.Random) -> list[tuple[float, float]]:
    """Seeded points away from the singular set and the poles of h."""
    u0, u1, v0, v1 = _box(fam)
    pts: list[tuple[float, float]] = []
    attempts = 0
    while len(pts) < n and attempts < 400 * n:
        attempts += 1
        u = rng.uniform(u0, u1)
        v = rng.uniform(v0, v1)
        try:
            jet = fam.weierstrass_jet(complex(u, v))
        except PoleError:
            continue
        ah = abs(jet.h)
        if not math.isfinite(ah) or ah > 20.0 or abs(ah - 1.0) < 0.1:
            continue
        p = fam.point(u, v)
        E = minkowski_inner(p.X_u, p.X_u)
        if not math.isfinite(E) or E < 0.3:
            continue
        pts.append((u, v))
    return pts


def _result(name: str, description: str, residual: float, tolerance: float, ok: bool | None = None) -> dict:
    passed = bool(residual <= tolerance) if ok is None else bool(ok and residual <= tolerance)
    return {
        "name": name,
        "description": description,
        "max_residual": residual,
        "tolerance": tolerance,
        "passed": passed,
    }


# ---------------------------------------------------------------------------
# metric-level checks
# ---------------------------------------------------------------------------


def check_gauss(grid_n: int = 41, extent: float = 2.0) -> dict:
    worst = 0.0
    for fam in STANDARD_METRIC_FAMILIES:
        for i in range(grid_n):
            u = -extent + 2.0 * extent * i / (grid_n - 1)
            for j in range(grid_n):
                v = -extent + 2.0 * extent * j / (grid_n - 1)
                worst = max(worst, abs(gauss_residual(eval_rho(fam, u, v))))
    return _result("gauss", "conformal factor satisfies rho*lap(rho) - |grad rho|^2 + 1 = 0", worst, 1e-10)


def check_ode(grid_n: int = 41, extent: float = 2.0) -> dict:
    worst = 0.0
    for fam in STANDARD_METRIC_FAMILIES:
        if not isinstance(fam, Case1):
            continue
        for i in range(grid_n):
            u = -extent + 2.0 * extent * i / (grid_n - 1)
            for j in range(grid_n):
                v = -extent + 2.0 * extent * j / (grid_n - 1)
                worst = max(worst, *(abs(r) for r in ode_residuals(fam, u, v)))
    return _result("ode", "separated equations for f(u), g(v) hold on grids", worst, 1e-10)


def check_mixed_partial(grid_n: int = 21, extent: float = 2.0, h: float = 1e-3) -> dict:
    worst = 0.0
    for fam in STANDARD_METRIC_FAMILIES:
        for i in range(grid_n):
            u = -extent + 2.0 * extent * i / (grid_n - 1)
            for j in range(grid_n):
                v = -extent + 2.0 * extent * j / (grid_n - 1)
                mixed = (
                    eval_rho(fam, u + h, v + h).rho
                    - eval_rho(fam, u + h, v - h).rho
                    - eval_rho(fam, u - h, v + h).rho
                    + eval_rho(fam, u - h, v - h).rho
                ) / (4.0 * h * h)
                worst = max(worst, abs(mixed))
    return _result("mixed_partial", "rho_uv vanishes (planar curvature lines)", worst, 1e-6)


# ---------------------------------------------------------------------------
# catalog-level checks
# ---------------------------------------------------------------------------


def check_weierstrass(families: list[SurfaceFamily], rng: random.Random, n_pts: int = 100) -> dict:
    worst = 0.0
    for fam in families:
        for u, v in sample_nonsingular(fam, n_pts, rng):
            z = complex(u, v)
            w = fam.integrand(z)
            p = fam.point(u, v)
            scale = max(1.0, max(abs(c) for c in w))
            du = (
                abs(p.X_u.x1 - w[0].real),
                abs(p.X_u.x2 - w[1].real),
                abs(p.X_u.x0 - w[2].real),
            )
            dv = (
                abs(p.X_v.x1 - (1j * w[0]).real),
                abs(p.X_v.x2 - (1j * w[1]).real),
                abs(p.X_v.x0 - (1j * w[2]).real),
            )
            worst = max(worst, max(max(du), max(dv)) / scale)
    return _result(
        "weierstrass",
        "closed-form partials equal the representation integrand pointwise",
        worst,
        1e-8,
    )


def check_holomorphy(families: list[SurfaceFamily], rng: random.Random, n_pts: int = 25) -> dict:
    worst = 0.0
    eps = 1e-6
    for fam in families:
        for u, v in sample_nonsingular(fam, n_pts, rng):
            z = complex(u, v)
            jet = fam.weierstrass_jet(z)
            jp = fam.weierstrass_jet(z + eps)
            jm = fam.weierstrass_jet(z - eps)
            for exact, approx in (
                (jet.h_z, (jp.h - jm.h) / (2.0 * eps)),
                (jet.h_zz, (jp.h_z - jm.h_z) / (2.0 * eps)),
                (jet.eta_z, (jp.eta - jm.eta) / (2.0 * eps)),
            ):
                worst = max(worst, abs(exact - approx) / max(1.0, abs(exact)))
    return _result("holomorphy", "jet derivatives match numerical differentiation", worst, 1e-8)


def check_conformality(families: list[SurfaceFamily], rng: random.Random, n_pts: int = 25) -> dict:
    worst = 0.0
    for fam in families:
        for u, v in sample_nonsingular(fam, n_pts, rng):
            ff = fundamental_form(fam.point(u, v))
            worst = max(worst, abs(ff.E - ff.G) / max(ff.E, 1e-12), abs(ff.F) / max(ff.E, 1.0))
    return _result("conformality", "E = G and F = 0 in curvature-line coordinates", worst, 1e-8)


def check_mean_curvature(families: list[SurfaceFamily], rng: random.Random, n_pts: int = 10) -> dict:
    worst = 0.0
    converges = True
    for fam in families:
        for u, v in sample_nonsingular(fam, n_pts, rng):
            h1 = abs(mean_curvature_fd(fam, u, v, 1e-3))
            h2 = abs(mean_curvature_fd(fam, u, v, 5e-4))
            worst = max(worst, h1)
            if h2 > max(0.5 * h1, 5e-8):
                converges = False
    return _result(
        "mean_curvature",
        "finite-difference mean curvature is O(step^2) small",
        worst,
        1e-5,
        ok=converges,
    )


def check_planarity(families: list[SurfaceFamily], rng: random.Random, n_pts: int = 10) -> dict:
    worst = 0.0
    for fam in families:
        for u, v in sample_nonsingular(fam, n_pts, rng):
            ru, rv = planarity_residual(fam, u, v)
            worst = max(worst, abs(ru), abs(rv))
    return _result(
        "planarity",
        "normalized det(X_u, X_uu, X_uuu) and det(X_v, X_vv, X_vvv) vanish",
        worst,
        1e-6,
    )


def check_normal_frame(families: list[SurfaceFamily], rng: random.Random, n_pts: int = 25) -> dict:
    worst = 0.0
    for fam in families:
        for u, v in sample_nonsingular(fam, n_pts, rng):
            p = fam.point(u, v)
            n = unit_normal(p)
            worst = max(
                worst,
                abs(minkowski_inner(n, n) + 1.0),
                abs(minkowski_inner(n, p.X_u)) / max(1.0, p.X_u.euclid_norm()),
                abs(minkowski_inner(n, p.X_v)) / max(1.0, p.X_v.euclid_norm()),
            )
    return _result("normal_frame", "unit normal is timelike and orthogonal to the tangent frame", worst, 1e-8)


def check_gauss_weingarten(families: list[SurfaceFamily], rng: random.Random, n_pts: int = 5) -> dict:
    worst = 0.0
    for fam in families:
        if abs(fam._mu().imag) > 1e-12:
            continue  # structure equations hold in curvature-line charts only
        for u, v in sample_nonsingular(fam, n_pts, rng):
            ru, rv = gauss_weingarten_residual(fam, u, v)
            worst = max(worst, ru, rv)
    return _result("gauss_weingarten", "N_u, N_v are +/- X_u/rho^2, -/+ X_v/rho^2", worst, 1e-6)


def _axial_expected(fam: SurfaceFamily) -> tuple[float, float | None]:
    if isinstance(fam, Theta):
        return (math.sin(fam.theta), math.cos(fam.theta) if abs(math.cos(fam.theta)) > 1e-12 else None)
    if isinstance(fam, Bonnet):
        return (fam.t**2 - 1.0, fam.t**2)
    if isinstance(fam, CatLight):
        return (0.0, fam.delta**2)
    if isinstance(fam, Lambda):
        return (0.0, None)
    if isinstance(fam, PlaneDef) and not fam._is_plane():
        d = math.sin(fam.psi) ** 2
        return (math.cos(fam.psi) ** 2, d if d > 1e-12 else None)
    raise ValueError("no axial expectation")


def check_axial(families: list[SurfaceFamily], rng: random.Random, grid_n: int = 10) -> dict:
    worst = 0.0
    for fam in families:
        if isinstance(fam, PlaneDef) and fam._is_plane():
            continue
        c_exp, d_exp = _axial_expected(fam)
        u0, u1, v0, v1 = _box(fam)
        samples_v1 = []
        samples_v2 = []
        for i in range(grid_n):
            for j in range(grid_n):
                u = u0 + (u1 - u0) * i / (grid_n - 1)
                v = v0 + (v1 - v0) * j / (grid_n - 1)
                if isinstance(fam, Lambda):
                    if abs(u) < 0.2:
                        continue
                else:
                    ms = fam.metric_data(u, v)
                    if ms is None or abs(ms.rho) < 0.2:
                        continue
                try:
                    ax = axial_directions(fam, u, v)
                except (SingularPointError, PoleError, ValueError):
                    continue
                if ax.v1 is not None:
                    samples_v1.append(ax)
                if ax.v2 is not None:
                    samples_v2.append(ax)
        if len(samples_v1) < 8:
            continue
        worst = max(worst, max(abs(a.norm1 - c_exp) for a in samples_v1))
        worst = max(worst, _component_spread([a.v1 for a in samples_v1]))
        if d_exp is not None and samples_v2:
            worst = max(worst, max(abs(a.norm2 - d_exp) for a in samples_v2))
            worst = max(worst, _component_spread([a.v2 for a in samples_v2]))
    return _result("axial", "axial vectors are constant with <v1,v1> = c, <v2,v2> = d", worst, 1e-7)


def _component_spread(vecs) -> float:
    spread = 0.0
    for pick in (lambda w: w.x1, lambda w: w.x2, lambda w: w.x0):
        vals = [pick(w) for w in vecs]
        mean = sum(vals) / len(vals)
        var = sum((x - mean) ** 2 for x in vals) / len(vals)
        spread = max(spread, math.sqrt(var))
    return spread


def check_metric_match(families: list[SurfaceFamily], rng: random.Random, n_pts: int = 25) -> dict:
    worst = 0.0
    for fam in families:
        pm = fam.paired_metric()
        if pm is None:
            continue
        for u, v in sample_nonsingular(fam, n_pts, rng):
            E = fundamental_form(fam.point(u, v)).E
            rho = pm.sample(u, v).rho
            worst = max(worst, abs(E - rho * rho) / max(E, 1e-12))
    return _result("metric_match", "chart metric agrees with the paired conformal factor", worst, 1e-8)


# ---------------------------------------------------------------------------
# singularity checks
# ---------------------------------------------------------------------------


def check_singular_counts() -> dict:
    mismatches = 0
    for t in BONNET_T_SET:
        fam = Bonnet(t)
        expected = sing.expected_period_counts(t)
        if sing.count_per_period(fam, n_samples=512) != expected:
            mismatches += 1
        if sing.count_per_period(fam, n_samples=1024) != expected:
            mismatches += 1
    return _result(
        "singular_counts",
        "per-period (SW, CCR, CS) counts match the classification table, stable under refinement",
        float(mismatches),
        0.0,
    )


def check_special_points() -> dict:
    worst = 0.0
    for t in BONNET_T_SET:
        found = sing.special_points(Bonnet(t))
        expected = sing.closed_form_special_points(t)
        if len(found) != len(expected):
            return _result(
                "special_points", "non-cuspidal-edge locations match closed forms", math.inf, 1e-6
            )
        for cls, (ue, ve) in expected:
            best = min(
                (math.hypot(p.u - ue, p.v - ve) for p in found if p.cls is cls),
                default=math.inf,
            )
            worst = max(worst, best)
    return _result("special_points", "non-cuspidal-edge locations match closed forms", worst, 1e-6)


def check_conjugate(rng: random.Random) -> dict:
    worst = 0.0
    table_ok = True
    for t in BONNET_T_SET:
        pts = sing.special_points(Bonnet(t))
        mapped = [sing.conjugate_classify(p.cls) for p in pts]
        ccr_y = sum(1 for c in mapped if c is sing.SingularityClass.CUSPIDAL_CROSS_CAP)
        sw_y = sum(1 for c in mapped if c is sing.SingularityClass.SWALLOWTAIL)
        cb_y = sum(1 for c in mapped if c is sing.SingularityClass.CUSPIDAL_BUTTERFLY)
        sw_x, ccr_x, cs_x = sing.expected_period_counts(t)
        # duality swaps SW <-> CCR and sends CS to cuspidal butterfly
        if (ccr_y, sw_y, cb_y) != (sw_x, ccr_x, cs_x):
            table_ok = False
    for fam in (Bonnet(1.0), Theta(0.5), Lambda(1.0 + 0j)):
        conj = conjugate_data(fam)
        for u, v in sample_nonsingular(fam, 15, rng):
            f0 = fundamental_form(fam.point(u, v))
            f1 = fundamental_form(conj.point(u, v))
            worst = max(
                worst,
                abs(f0.E - f1.E) / max(f0.E, 1e-12),
                abs(f0.G - f1.G) / max(f0.G, 1e-12),
                abs(f0.F - f1.F) / max(f0.E, 1.0),
            )
    return _result(
        "conjugate",
        "conjugation is isometric and maps singularity counts by the duality",
        worst,
        1e-8,
        ok=table_ok,
    )


# ---------------------------------------------------------------------------
# deformation and quadrature checks
# ---------------------------------------------------------------------------


def _sup_diff(fa: SurfaceFamily, fb: SurfaceFamily, extent: float, n: int = 11) -> float:
    worst = 0.0
    for i in range(n):
        for j in range(n):
            u = -extent + 2.0 * extent * i / (n - 1)
            v = -extent + 2.0 * extent * j / (n - 1)
            d = fa.position(u, v) - fb.position(u, v)
            worst = max(worst, d.euclid_norm())
    return worst


def check_deformation() -> dict:
    j1 = _sup_diff(
        deformation_family(DeformationStage.PLANE_TO_CS, 1.0),
        deformation_family(DeformationStage.THETA_SWEEP, 0.0),
        extent=1.0,
    )
    j2 = _sup_diff(
        deformation_family(DeformationStage.THETA_SWEEP, 0.5),
        deformation_family(DeformationStage.TO_LIGHT_CAT, 0.0),
        extent=1.0,
    )
    lim1 = _sup_diff(CatLight(1e-2), Lambda(1.0 + 0j), extent=0.5)
    lim2 = _sup_diff(CatLight(5e-3), Lambda(1.0 + 0j), extent=0.5)
    limit_ok = lim1 < 1e-3 and lim2 < lim1
    return _result(
        "deformation",
        "stage junctions coincide; the delta -> 0 limit approaches the lightlike catenoid",
        max(j1, j2),
        1e-9,
        ok=limit_ok,
    )


def check_quadrature() -> dict:
    worst = 0.0
    cases = [
        (Bonnet(1.0), 0.0 + 0.0j, 0.8 + 0.6j),
        (Lambda(1.0 + 0j), 0.0 + 0.0j, 1.0 + 0.0j),
        (Theta(1.2), 0.3 + 0.2j, -0.4 + 0.9j),
        (CatLight(0.6), -0.5 - 0.4j, 0.7 + 0.3j),
    ]
    for fam, z0, z1 in cases:
        by_quad = integrate_surface(fam, z0, z1)
        direct = fam.position(z1.real, z1.imag) - fam.position(z0.real, z0.imag)
        worst = max(worst, (by_quad - direct).euclid_norm())
        corner2 = complex(z0.real, z1.imag)
        other_path = integrate_surface(fam, z0, corner2) + integrate_surface(fam, corner2, z1)
        worst = max(worst, (by_quad - other_path).euclid_norm())
    return _result(
        "quadrature",
        "numerical representation integral matches closed forms and is path independent",
        worst,
        1e-8,
    )


# ---------------------------------------------------------------------------
# per-family report entries
# ---------------------------------------------------------------------------


def family_report(fam: SurfaceFamily, rng: random.Random) -> dict:
    pts = sample_nonsingular(fam, 10, rng)
    conf = 0.0
    gauss = 0.0
    meanc = 0.0
    planar = 0.0
    for u, v in pts:
        ff = fundamental_form(fam.point(u, v))
        conf = max(conf, abs(ff.E - ff.G) / max(ff.E, 1e-12), abs(ff.F) / max(ff.E, 1.0))
        pm = fam.paired_metric()
        if pm is not None:
            gauss = max(gauss, abs(gauss_residual(pm.sample(u, v))))
        meanc = max(meanc, abs(mean_curvature_fd(fam, u, v, 1e-3)))
        ru, rv = planarity_residual(fam, u, v)
        planar = max(planar, abs(ru), abs(rv))
    axial = None
    if pts:
        try:
            ax = axial_directions(fam, *pts[0])
            axial = {
                "norm1": ax.norm1 if ax.v1 is not None else None,
                "norm2": ax.norm2 if ax.v2 is not None else None,
            }
        except (ValueError, SingularPointError):
            axial = None
    counts = None
    if isinstance(fam, Bonnet):
        sw, ccr, cs = sing.count_per_period(fam)
        counts = {"sw": sw, "ccr": ccr, "cs": cs}
    return {
        "family": fam.describe(),
        "residuals": {
            "conformality": conf,
            "gauss": gauss,
            "mean_curvature": meanc,
            "planarity": planar,
        },
        "axial": axial,
        "singular_counts": counts,
    }


# ---------------------------------------------------------------------------
# driver
# ---------------------------------------------------------------------------

CHECK_NAMES = (
    "gauss",
    "ode",
    "mixed_partial",
    "weierstrass",
    "holomorphy",
    "conformality",
    "mean_curvature",
    "planarity",
    "normal_frame",
    "gauss_weingarten",
    "axial",
    "metric_match",
    "singular_counts",
    "special_points",
    "conjugate",
    "deformation",
    "quadrature",
)


def run_verify(families: list[SurfaceFamily] | None = None, checks: list[str] | None = None) -> dict:
    """Run the selected checks (all by default) and build the report."""
    fams = families if families is not None else standard_catalog()
    selected = list(checks) if checks else list(CHECK_NAMES)
    unknown = [c for c in selected if c not in CHECK_NAMES]
    if unknown:
        raise ValueError(f"unknown checks: {unknown}; available: {', '.join(CHECK_NAMES)}")
    rng = random.Random(_SEED)
    results = []
    for name in CHECK_NAMES:
        if name not in selected:
            continue
        if name == "gauss":
            results.append(check_gauss())
        elif name == "ode":
            results.append(check_ode())
        elif name == "mixed_partial":
            results.append(check_mixed_partial())
        elif name == "weierstrass":
            results.append(check_weierstrass(fams, rng))
        elif name == "holomorphy":
            results.append(check_holomorphy(fams, rng))
        elif name == "conformality":
            results.append(check_conformality(fams, rng))
        elif name == "mean_curvature":
            results.append(check_mean_curvature(fams, rng))
        elif name == "planarity":
            results.append(check_planarity(fams, rng))
        elif name == "normal_frame":
            results.append(check_normal_frame(fams, rng))
        elif name == "gauss_weingarten":
            results.append(check_gauss_weingarten(fams, rng))
        elif name == "axial":
            results.append(check_axial(fams, rng))
        elif name == "metric_match":
            results.append(check_metric_match(fams, rng))
        elif name == "singular_counts":
            results.append(check_singular_counts())
        elif name == "special_points":
            results.append(check_special_points())
        elif name == "conjugate":
            results.append(check_conjugate(rng))
        elif name == "deformation":
            results.append(check_deformation())
        elif name == "quadrature":
            results.append(check_quadrature())
    fam_reports = [family_report(f, random.Random(_SEED + 1)) for f in fams]
    return {
        "tool": "maxfaces-verify",
        "all_passed": all(r["passed"] for r in results),
        "n_checks": len(results),
        "n_passed": sum(1 for r in results if r["passed"]),
        "checks": results,
        "families": fam_reports,
    }


def report_json(report: dict) -> str:
    return json.dumps(report, indent=2, allow_nan=True)
