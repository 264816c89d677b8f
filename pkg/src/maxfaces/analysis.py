"""Differential-geometric quantities and residual diagnostics.

Everything here treats the surface as data: fundamental forms and the
unit normal come from exact partials, mean curvature is deliberately
finite-difference (so vanishing mean curvature is an observed O(step^2)
limit, not an algebraic identity), and the planarity residuals are the
normalized determinants det(X_u, X_uu, X_uuu) and det(X_v, X_vv, X_vvv)
that vanish exactly when the coordinate curves are planar.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass

from .errors import DivisionBySqrtZero, SingularPointError
from .families import Lambda, PlaneDef, SurfaceFamily, SurfacePoint
from .lorentz import LVec3, det3, lorentz_cross, minkowski_inner
from .metric import Case1, eval_rho


@dataclass(frozen=True)
class FirstFundamentalForm:
    E: float
    F: float
    G: float


@dataclass(frozen=True)
class AxialData:
    """Axial directions of a surface; absent entries are None with norm nan.

    For a surface paired with constants (c, d) the norms satisfy
    <v1, v1> = c and <v2, v2> = d; v2 exists only when d > 0.
    """

    v1: LVec3 | None
    v2: LVec3 | None
    norm1: float
    norm2: float


def fundamental_form(p: SurfacePoint) -> FirstFundamentalForm:
    """First fundamental form coefficients via the ambient inner product."""
    return FirstFundamentalForm(
        E=minkowski_inner(p.X_u, p.X_u),
        F=minkowski_inner(p.X_u, p.X_v),
        G=minkowski_inner(p.X_v, p.X_v),
    )


def unit_normal(p: SurfacePoint, tol: float = 1e-12) -> LVec3:
    """Timelike unit normal with <N, N> = -1, oriented with positive x0.

    Raises SingularPointError when the tangent frame degenerates
    (E below tol, or the cross product fails to be timelike).
    """
    E = minkowski_inner(p.X_u, p.X_u)
    if E < tol:
        raise SingularPointError(f"degenerate frame: E = {E}")
    w = lorentz_cross(p.X_u, p.X_v)
    q = -minkowski_inner(w, w)
    if q <= tol:
        raise SingularPointError("normal direction is not timelike")
    n = w / math.sqrt(q)
    return -n if n.x0 < 0 else n


def normal_from_metric(fam: Case1, u: float, v: float, tol: float = 1e-12) -> LVec3:
    """Unit normal of the metric-normalized surface directly from rho.

    Valid for c >= d > 0 (both axial directions spacelike, frame aligned
    with the coordinate axes):

        N = (-(1/sqrt(c)) rho_u/rho, -(1/sqrt(d)) rho_v/rho,
             sqrt(rho_u^2/(c rho^2) + rho_v^2/(d rho^2) + 1)).
    """
    if not isinstance(fam, Case1):
        raise TypeError("normal_from_metric applies to Case1 families")
    if fam.d == 0.0:
        raise DivisionBySqrtZero("closed normal form needs d > 0; use the axial chart instead")
    if fam.c < fam.d:
        raise ValueError("closed normal form requires c >= d")
    s = eval_rho(fam, u, v)
    if abs(s.rho) < tol:
        raise SingularPointError(f"rho({u}, {v}) = 0")
    ru = s.rho_u / s.rho
    rv = s.rho_v / s.rho
    return LVec3(
        -ru / math.sqrt(fam.c),
        -rv / math.sqrt(fam.d),
        math.sqrt(ru * ru / fam.c + rv * rv / fam.d + 1.0),
    )


def mean_curvature_fd(surface, u: float, v: float, step: float) -> float:
    """Mean curvature by central finite differences of the position map.

    ``surface`` needs only a ``position(u, v) -> LVec3`` method, so
    non-catalog control surfaces can be fed through the same check.
    For the catalog surfaces the value is O(step^2).
    """
    if step <= 0:
        raise ValueError("step must be positive")
    pos = surface.position
    xc = pos(u, v)
    xpu, xmu = pos(u + step, v), pos(u - step, v)
    xpv, xmv = pos(u, v + step), pos(u, v - step)
    xpp, xpm = pos(u + step, v + step), pos(u + step, v - step)
    xmp, xmm = pos(u - step, v + step), pos(u - step, v - step)
    h2 = step * step
    xu = (xpu - xmu) / (2.0 * step)
    xv = (xpv - xmv) / (2.0 * step)
    xuu = (xpu - 2.0 * xc + xmu) / h2
    xvv = (xpv - 2.0 * xc + xmv) / h2
    xuv = (xpp - xpm - xmp + xmm) / (4.0 * h2)
    E = minkowski_inner(xu, xu)
    F = minkowski_inner(xu, xv)
    G = minkowski_inner(xv, xv)
    if E < 1e-12:
        raise SingularPointError(f"degenerate frame: E = {E}")
    w = lorentz_cross(xu, xv)
    q = -minkowski_inner(w, w)
    if q <= 0.0:
        raise SingularPointError("normal direction is not timelike")
    n = w / math.sqrt(q)
    if n.x0 < 0:
        n = -n
    e = minkowski_inner(xuu, n)
    f = minkowski_inner(xuv, n)
    g = minkowski_inner(xvv, n)
    return (G * e - 2.0 * F * f + E * g) / (2.0 * (E * G - F * F))


def _normalized_det(a: LVec3, b: LVec3, c: LVec3) -> float:
    scale = a.euclid_norm() * b.euclid_norm() * c.euclid_norm()
    if scale < 1e-30:
        return 0.0
    return det3(a, b, c) / scale


def planarity_residual(surface, u: float, v: float, step: float = 1e-4) -> tuple[float, float]:
    """Normalized planarity determinants along the two curvature-line directions.

    For real associated factors the curvature lines are the coordinate
    curves.  A factor mu = e^{i beta} rotates the curvature-line
    directions to e^{i chi}, chi = -beta/2, in the domain; derivatives
    are taken along that direction and its orthogonal.  Catalog surfaces
    supply analytic first and second derivatives; third derivatives come
    from Richardson-extrapolated central differences of the second.
    Position-only surfaces fall back to full finite differences along
    the coordinate curves with a coarser step.
    """
    if hasattr(surface, "primitive_dd"):
        z = complex(u, v)
        chi = -cmath.phase(surface._mu()) / 2.0
        fd = surface.primitive_d(z)
        fdd = surface.primitive_dd(z)

        def directional(c: complex) -> tuple[LVec3, LVec3, LVec3]:
            d1 = LVec3(*((c * w).real for w in fd))
            d2 = LVec3(*((c * c * w).real for w in fdd))

            def d3_at(h: float) -> LVec3:
                fp = surface.primitive_dd(z + h * c)
                fm = surface.primitive_dd(z - h * c)
                return LVec3(*((c * c * (p - m) / (2.0 * h)).real for p, m in zip(fp, fm)))

            d3 = (4.0 * d3_at(step / 2.0) - d3_at(step)) / 3.0
            return d1, d2, d3

        ru = _normalized_det(*directional(cmath.exp(1j * chi)))
        rv = _normalized_det(*directional(1j * cmath.exp(1j * chi)))
        return (ru, rv)

    h = max(step, 1e-2)
    pos = surface.position

    def stencil(direction: str) -> tuple[LVec3, LVec3, LVec3]:
        def at(k: int) -> LVec3:
            return pos(u + k * h, v) if direction == "u" else pos(u, v + k * h)

        x_m2, x_m1, x_0, x_p1, x_p2 = at(-2), at(-1), at(0), at(1), at(2)
        d1 = (x_p1 - x_m1) / (2.0 * h)
        d2 = (x_p1 - 2.0 * x_0 + x_m1) / (h * h)
        d3 = (x_p2 - 2.0 * x_p1 + 2.0 * x_m1 - x_m2) / (2.0 * h**3)
        return d1, d2, d3

    ru = _normalized_det(*stencil("u"))
    rv = _normalized_det(*stencil("v"))
    return (ru, rv)


def axial_directions(fam: SurfaceFamily, u: float, v: float, rho_tol: float = 1e-9) -> AxialData:
    """Axial directions from the metric data and the surface frame.

    The normal is recovered from the structure equation
    N = X_uu - (rho_u/rho) X_u + (rho_v/rho) X_v, which keeps the frame,
    the metric and the orientation mutually coherent; the axial vectors

        v1 = ((rho_u^2 - rho rho_uu)/rho^2) X_u - (rho_u rho_v/rho^2) X_v + (rho_u/rho) N
        v2 = -(rho_u rho_v/rho^2) X_u + ((rho_v^2 - rho rho_vv)/rho^2) X_v - (rho_v/rho) N

    are then constant over the surface.  Constancy is a tested property.
    """
    if isinstance(fam, Lambda):
        return _axial_lambda(fam, u, v, rho_tol)
    ms = fam.metric_data(u, v)
    if ms is None:
        raise ValueError(f"{type(fam).__name__} has no normalized metric pairing (plane or unsupported)")
    if abs(ms.rho) < rho_tol:
        raise SingularPointError(f"rho({u}, {v}) = 0")
    scale = fam.gw_scale()
    p = fam.point(u, v)
    xu, xv, xuu = p.X_u / scale, p.X_v / scale, p.X_uu / scale
    pu = ms.rho_u / ms.rho
    pv = ms.rho_v / ms.rho
    n = xuu - pu * xu + pv * xv
    a = (ms.rho_u**2 - ms.rho * ms.rho_uu) / ms.rho**2
    b = ms.rho_u * ms.rho_v / ms.rho**2
    c = (ms.rho_v**2 - ms.rho * ms.rho_vv) / ms.rho**2
    v1 = a * xu - b * xv + pu * n
    v2 = -b * xu + c * xv - pv * n
    if _g_vanishes(fam):
        return AxialData(v1, None, minkowski_inner(v1, v1), math.nan)
    return AxialData(v1, v2, minkowski_inner(v1, v1), minkowski_inner(v2, v2))


def _g_vanishes(fam: SurfaceFamily) -> bool:
    # g identically zero <=> no v2: paired constant d = 0, or a
    # plane-deformation member with sin(psi) = 0.
    pm = fam.paired_metric()
    if pm is not None:
        if isinstance(pm.family, Case1):
            return pm.family.d == 0.0
        return math.sin(pm.family.phi) == 0.0
    return isinstance(fam, PlaneDef) and math.sin(fam.psi) == 0.0


def _axial_lambda(fam: Lambda, u: float, v: float, rho_tol: float) -> AxialData:
    # The chart coordinates are conformal but only curvature-line aligned
    # for real eta multipliers; rotate z_cl = e^{i phi} z with mu = e^{2 i phi}
    # to reach the curvature-line frame, where rho = cos(phi) u_cl + sin(phi) v_cl.
    phi = cmath.phase(fam._mu()) / 2.0
    cp, sp = math.cos(phi), math.sin(phi)
    rho = u  # Re(e^{-i phi} z_cl) = Re z
    if abs(rho) < rho_tol:
        raise SingularPointError(f"rho({u}, {v}) = 0")
    p = fam.point(u, v)
    zu = cp * p.X_u - sp * p.X_v
    zv = sp * p.X_u + cp * p.X_v
    zuu = (cp * cp) * p.X_uu - (2.0 * cp * sp) * p.X_uv + (sp * sp) * p.X_vv
    n = zuu - (cp / rho) * zu + (sp / rho) * zv
    v1 = (cp * cp / rho**2) * zu - (cp * sp / rho**2) * zv + (cp / rho) * n
    v2 = -(cp * sp / rho**2) * zu + (sp * sp / rho**2) * zv - (sp / rho) * n
    out1 = v1 if abs(cp) > 1e-12 else None
    out2 = v2 if abs(sp) > 1e-12 else None
    return AxialData(
        out1,
        out2,
        minkowski_inner(v1, v1) if out1 is not None else math.nan,
        minkowski_inner(v2, v2) if out2 is not None else math.nan,
    )


def gauss_weingarten_residual(
    fam: SurfaceFamily, u: float, v: float, step: float = 1e-4
) -> tuple[float, float]:
    """Residuals of N_u = sigma X_u/rho^2 and N_v = -sigma X_v/rho^2 via FD of N.

    sigma resolves the two-sheet orientation freedom of the normal; the
    content checked is the proportionality and the opposite relative sign.
    On a chart scaled by a homothety m the relation reads
    N_u = sigma m X_u / E with E the chart metric coefficient.
    """
    p = fam.point(u, v)
    E = minkowski_inner(p.X_u, p.X_u)
    m = fam.gw_scale()

    def central(du: float, dv: float, h: float) -> LVec3:
        np_ = unit_normal(fam.point(u + h * du, v + h * dv))
        nm_ = unit_normal(fam.point(u - h * du, v - h * dv))
        return (np_ - nm_) / (2.0 * h)

    nu = (4.0 * central(1.0, 0.0, step / 2.0) - central(1.0, 0.0, step)) / 3.0
    nv = (4.0 * central(0.0, 1.0, step / 2.0) - central(0.0, 1.0, step)) / 3.0
    sigma = 1.0 if minkowski_inner(nu, p.X_u) >= 0.0 else -1.0
    ru = (nu - (sigma * m / E) * p.X_u).euclid_norm()
    rv = (nv + (sigma * m / E) * p.X_v).euclid_norm()
    return (ru, rv)
