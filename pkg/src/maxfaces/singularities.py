"""Singular set detection and wavefront-singularity classification.

A point is singular exactly where |h| = 1.  The classification uses the
criteria triple

    varphi = h_z / (h^2 eta),
    phihat = (h / h_z) varphi_z,
    bigphi = (h / h_z) phihat_z,

with: cuspidal edge where Re varphi != 0 and Im varphi != 0; swallowtail
where varphi is real nonzero and Re phihat != 0; cuspidal cross cap where
varphi is imaginary nonzero and Im phihat != 0; cuspidal S1^- where
varphi is imaginary nonzero, phihat is real nonzero and Im bigphi != 0.
Cuspidal butterflies arise only through the conjugation duality.

For the Bonnet family the whole singular set is parametrized by the
phase of h: h = e^{i alpha} gives z(alpha) = log(t + e^{i alpha}), which
traces each period of the curve exactly once and stays well behaved at
the turning points where a fixed-v slice would see a double root.
"""

from __future__ import annotations

import cmath
import enum
import math
from dataclasses import dataclass
from typing import Callable

from .errors import DegenerateCriteria, NoBracketFound, PoleError, UnmappedClass
from .families import Bonnet, SurfaceFamily, WJet

TWO_PI = 2.0 * math.pi

#: classification tolerance applied to criteria normalized by their modulus
TOL_CLASS = 1e-7


@dataclass(frozen=True)
class CriteriaValues:
    varphi: complex
    phi_hat: complex
    big_phi: complex


class SingularityClass(enum.Enum):
    CUSPIDAL_EDGE = "cuspidal_edge"
    SWALLOWTAIL = "swallowtail"
    CUSPIDAL_CROSS_CAP = "cuspidal_cross_cap"
    CUSPIDAL_S1_MINUS = "cuspidal_s1_minus"
    CUSPIDAL_BUTTERFLY = "cuspidal_butterfly"
    DEGENERATE = "degenerate"


@dataclass(frozen=True)
class SingularPoint:
    u: float
    v: float
    cls: SingularityClass
    crit: CriteriaValues


@dataclass(frozen=True)
class SingularCurve:
    points: tuple[tuple[float, float], ...]
    period_index: int


def criteria_eval(jet_fn: Callable[[complex], WJet], z: complex, step: float = 1e-5) -> CriteriaValues:
    """Evaluate (varphi, phihat, bigphi) at z from a jet source.

    varphi and phihat compose analytically from the jet fields; the
    derivative of phihat entering bigphi is a central difference (the
    jet carries no third derivatives).  Raises DegenerateCriteria when
    h, eta or h_z vanish at the point.
    """
    jet = jet_fn(z)
    if abs(jet.h) < 1e-13 or abs(jet.eta) < 1e-13:
        raise DegenerateCriteria(f"varphi undefined at z = {z}: h or eta vanishes")
    if abs(jet.h_z) < 1e-13:
        raise DegenerateCriteria(f"phihat undefined at z = {z}: h_z vanishes")
    eps = step * max(1.0, abs(z))
    dname = (_phihat(jet_fn(z + eps)) - _phihat(jet_fn(z - eps))) / (2.0 * eps)
    return CriteriaValues(
        varphi=_varphi(jet),
        phi_hat=_phihat(jet),
        big_phi=(jet.h / jet.h_z) * dname,
    )


def _varphi(jet: WJet) -> complex:
    return jet.h_z / (jet.h * jet.h * jet.eta)


def _phihat(jet: WJet) -> complex:
    # (h/h_z) d/dz [h_z/(h^2 eta)] composed through the log derivative.
    return _varphi(jet) * (
        jet.h * jet.h_zz / (jet.h_z * jet.h_z) - 2.0 - jet.h * jet.eta_z / (jet.h_z * jet.eta)
    )


def classify_point(crit: CriteriaValues, tol_class: float = TOL_CLASS) -> SingularityClass:
    """Assign the singularity class from normalized criteria values.

    All comparisons run on values normalized by their modulus, so the
    tolerance is scale free.  Anything not matching a definite signature
    is reported as degenerate, never guessed.
    """
    av = abs(crit.varphi)
    if av < 1e-300:
        return SingularityClass.DEGENERATE
    re_v = abs(crit.varphi.real) / av
    im_v = abs(crit.varphi.imag) / av
    ah = abs(crit.phi_hat)
    re_h = abs(crit.phi_hat.real) / ah if ah > 0 else 0.0
    im_h = abs(crit.phi_hat.imag) / ah if ah > 0 else 0.0
    ap = abs(crit.big_phi)
    im_p = abs(crit.big_phi.imag) / ap if ap > 0 else 0.0
    if re_v > tol_class and im_v > tol_class:
        return SingularityClass.CUSPIDAL_EDGE
    if im_v <= tol_class and re_v > tol_class and re_h > tol_class:
        return SingularityClass.SWALLOWTAIL
    if re_v <= tol_class and im_v > tol_class:
        if im_h > tol_class:
            return SingularityClass.CUSPIDAL_CROSS_CAP
        if re_h > tol_class and im_p > tol_class:
            return SingularityClass.CUSPIDAL_S1_MINUS
    return SingularityClass.DEGENERATE


def conjugate_classify(original: SingularityClass) -> SingularityClass:
    """Image of a singularity class under conjugation of the surface."""
    mapping = {
        SingularityClass.CUSPIDAL_EDGE: SingularityClass.CUSPIDAL_EDGE,
        SingularityClass.SWALLOWTAIL: SingularityClass.CUSPIDAL_CROSS_CAP,
        SingularityClass.CUSPIDAL_CROSS_CAP: SingularityClass.SWALLOWTAIL,
        SingularityClass.CUSPIDAL_S1_MINUS: SingularityClass.CUSPIDAL_BUTTERFLY,
    }
    try:
        return mapping[original]
    except KeyError:
        raise UnmappedClass(f"no conjugation image for {original}") from None


# ---------------------------------------------------------------------------
# tracing the singular set
# ---------------------------------------------------------------------------


def bisect(fn: Callable[[float], float], a: float, b: float, tol: float = 1e-12) -> float:
    """Plain bisection; requires a sign change on [a, b]."""
    fa, fb = fn(a), fn(b)
    if fa == 0.0:
        return a
    if fb == 0.0:
        return b
    if (fa > 0) == (fb > 0):
        raise NoBracketFound(f"no sign change on [{a}, {b}]")
    while b - a > tol:
        m = 0.5 * (a + b)
        fm = fn(m)
        if fm == 0.0:
            return m
        if (fm > 0) == (fa > 0):
            a, fa = m, fm
        else:
            b, fb = m, fm
    return 0.5 * (a + b)


def _abs_h_minus_one(fam: SurfaceFamily, u: float, v: float) -> float | None:
    try:
        return abs(fam.weierstrass_jet(complex(u, v)).h) - 1.0
    except PoleError:
        return None


def _default_u_range(fam: SurfaceFamily) -> tuple[float, float]:
    if isinstance(fam, Bonnet):
        # |e^z - t| = 1 forces e^u in [|t - 1|, t + 1].
        lo = math.log(abs(fam.t - 1.0)) if abs(fam.t - 1.0) > 1e-8 else -18.5
        return (lo - 0.05, math.log(fam.t + 1.0) + 0.05)
    return (-3.0, 3.0)


def singular_u_roots(
    fam: SurfaceFamily,
    v: float,
    u_range: tuple[float, float] | None = None,
    n_brackets: int = 512,
    tol: float = 1e-12,
) -> list[float]:
    """All u with |h(u + iv)| = 1, by scanning, bracketing and bisection."""
    lo, hi = u_range if u_range is not None else _default_u_range(fam)
    us = [lo + (hi - lo) * k / (n_brackets - 1) for k in range(n_brackets)]
    qs = [_abs_h_minus_one(fam, u, v) for u in us]

    def q(u: float) -> float:
        val = _abs_h_minus_one(fam, u, v)
        if val is None:
            raise NoBracketFound(f"pole inside bracket at u = {u}")
        return val

    roots: list[float] = []
    for k in range(n_brackets - 1):
        qa, qb = qs[k], qs[k + 1]
        if qa is None or qb is None:
            continue
        if qa == 0.0:
            roots.append(us[k])
            continue
        if (qa > 0) != (qb > 0):
            try:
                roots.append(bisect(q, us[k], us[k + 1], tol))
            except NoBracketFound:
                continue
    if qs[-1] == 0.0:
        roots.append(us[-1])
    return roots


def trace_singular_curve(
    fam: SurfaceFamily,
    v_range: tuple[float, float],
    n_steps: int,
    u_range: tuple[float, float] | None = None,
    max_arc_step: float = 0.5,
) -> list[SingularCurve]:
    """Trace the singular set over v in v_range by per-slice root finding.

    Each v sample contributes every u root of |h| = 1; points are joined
    into curves by nearest-neighbor continuation subject to
    ``max_arc_step``.  Slices without roots simply contribute nothing.
    """
    if n_steps < 16:
        raise ValueError("n_steps must be at least 16")
    v0, v1 = v_range
    period = fam.period() if isinstance(fam, Bonnet) else None
    open_curves: list[list[tuple[float, float]]] = []
    closed: list[list[tuple[float, float]]] = []
    for k in range(n_steps):
        v = v0 + (v1 - v0) * k / (n_steps - 1)
        roots = singular_u_roots(fam, v, u_range=u_range)
        touched: set[int] = set()
        for u in roots:
            best, best_d = None, max_arc_step
            for idx, curve in enumerate(open_curves):
                if idx in touched:
                    continue
                lu, lv = curve[-1]
                d = math.hypot(u - lu, v - lv)
                if d <= best_d:
                    best, best_d = idx, d
            if best is None:
                open_curves.append([(u, v)])
                touched.add(len(open_curves) - 1)
            else:
                open_curves[best].append((u, v))
                touched.add(best)
        stale = [idx for idx, c in enumerate(open_curves) if idx not in touched and c]
        for idx in sorted(stale, reverse=True):
            closed.append(open_curves.pop(idx))
    closed.extend(open_curves)
    out = []
    for pts in closed:
        if not pts:
            continue
        v_mid = 0.5 * (pts[0][1] + pts[-1][1])
        idx = int(math.floor(v_mid / period)) if period else 0
        out.append(SingularCurve(points=tuple(pts), period_index=idx))
    return out


# ---------------------------------------------------------------------------
# special points of the Bonnet family
# ---------------------------------------------------------------------------


def _curve_point(fam: Bonnet, alpha: float) -> complex | None:
    w = fam.t + cmath.exp(1j * alpha)
    if abs(w) < 1e-9:
        return None  # the t = 1 curve runs to u = -infinity here
    return cmath.log(w)


def _varphi_on_curve(fam: Bonnet, alpha: float) -> complex | None:
    z = _curve_point(fam, alpha)
    if z is None:
        return None
    return _varphi(fam.weierstrass_jet(z))


def _ternary_min(fn: Callable[[float], float], a: float, b: float, tol: float = 1e-12) -> float:
    while b - a > tol:
        m1 = a + (b - a) / 3.0
        m2 = b - (b - a) / 3.0
        if fn(m1) <= fn(m2):
            b = m2
        else:
            a = m1
    return 0.5 * (a + b)


def _component_roots(
    fam: Bonnet, component: Callable[[complex], float], n_samples: int, touch_tol: float
) -> list[float]:
    """Roots of one normalized criteria component along the singular curve.

    Sign changes are bisected; tangential zeros (the component touches
    zero at a local minimum of its modulus without changing sign, which
    happens at the cuspidal S1^- points) are caught by minimizing the
    modulus and accepting sufficiently deep minima.
    """
    # half-step offset keeps exact zeros off the sample grid
    alphas = [(j + 0.5) * TWO_PI / n_samples for j in range(n_samples)]

    def g_opt(alpha: float) -> float | None:
        p = _varphi_on_curve(fam, alpha)
        if p is None or abs(p) < 1e-300:
            return None
        return component(p / abs(p))

    def g(alpha: float) -> float:
        val = g_opt(alpha)
        if val is None:
            raise NoBracketFound(f"criteria undefined at alpha = {alpha}")
        return val

    vals = [g_opt(a) for a in alphas]
    roots: list[float] = []
    for j in range(n_samples):
        a0 = alphas[j]
        a1 = alphas[(j + 1) % n_samples] + (TWO_PI if j == n_samples - 1 else 0.0)
        g0, g1 = vals[j], vals[(j + 1) % n_samples]
        if g0 is None or g1 is None:
            continue
        if (g0 > 0) != (g1 > 0):
            try:
                root = bisect(g, a0, a1)
            except NoBracketFound:
                continue  # the zero sits at the puncture of the t = 1 curve
            if _curve_point(fam, root) is not None:
                roots.append(root % TWO_PI)
    for j in range(n_samples):
        gm, g0, gp = vals[(j - 1) % n_samples], vals[j], vals[(j + 1) % n_samples]
        if gm is None or g0 is None or gp is None:
            continue
        if abs(g0) < abs(gm) and abs(g0) <= abs(gp) and (gm > 0) == (g0 > 0) == (gp > 0):
            lo = alphas[(j - 1) % n_samples]
            hi = lo + 2.0 * TWO_PI / n_samples
            try:
                astar = _ternary_min(lambda a: abs(g(a)), lo, hi)
                gval = g(astar)
            except NoBracketFound:
                continue
            if abs(gval) < touch_tol and _curve_point(fam, astar) is not None:
                roots.append(astar % TWO_PI)
    return roots


def special_points(
    fam: Bonnet, n_samples: int = 512, touch_tol: float = 1e-8
) -> list[SingularPoint]:
    """All non-cuspidal-edge singular points in one v period [0, 2*pi).

    Locates zeros of Im(varphi) and Re(varphi) along the phase
    parametrization of the singular curve, classifies each and returns
    them sorted by (v, u).
    """
    if not isinstance(fam, Bonnet):
        raise TypeError("special_points is defined for the Bonnet family")
    candidates: list[float] = []
    candidates += _component_roots(fam, lambda p: p.imag, n_samples, touch_tol)
    candidates += _component_roots(fam, lambda p: p.real, n_samples, touch_tol)
    candidates.sort()
    merged: list[float] = []
    for a in candidates:
        if merged and min(abs(a - merged[-1]), TWO_PI - abs(a - merged[-1])) < 1e-7:
            continue
        if merged and min(abs(a - merged[0]), TWO_PI - abs(a - merged[0])) < 1e-7:
            continue
        merged.append(a)
    points = []
    for alpha in merged:
        z = _curve_point(fam, alpha)
        if z is None:
            continue
        crit = criteria_eval(fam.weierstrass_jet, z)
        cls = classify_point(crit)
        v = z.imag % TWO_PI
        if TWO_PI - v < 1e-9:
            v = 0.0  # half-open period [0, 2*pi)
        points.append(SingularPoint(u=z.real, v=v, cls=cls, crit=crit))
    points.sort(key=lambda p: (p.v, p.u))
    return points


def count_per_period(fam: Bonnet, n_samples: int = 512) -> tuple[int, int, int]:
    """(swallowtails, cuspidal cross caps, cuspidal S1^-) in one v period."""
    pts = special_points(fam, n_samples=n_samples)
    sw = sum(1 for p in pts if p.cls is SingularityClass.SWALLOWTAIL)
    ccr = sum(1 for p in pts if p.cls is SingularityClass.CUSPIDAL_CROSS_CAP)
    cs = sum(1 for p in pts if p.cls is SingularityClass.CUSPIDAL_S1_MINUS)
    return (sw, ccr, cs)


# ---------------------------------------------------------------------------
# closed-form reference data for the Bonnet family
# ---------------------------------------------------------------------------

_T_BOUNDARY_TOL = 1e-9


def expected_period_counts(t: float) -> tuple[int, int, int]:
    """Known (SW, CCR, CS) counts per period as a function of t."""
    if t <= 0:
        raise ValueError("t must be positive")
    s2 = 1.0 / math.sqrt(2.0)
    if abs(t - s2) <= _T_BOUNDARY_TOL:
        return (2, 0, 2)
    if abs(t - 1.0) <= _T_BOUNDARY_TOL:
        return (1, 2, 0)
    if t < s2:
        return (2, 0, 0)
    if t < 1.0:
        return (2, 4, 0)
    return (4, 4, 0)


def closed_form_special_points(t: float) -> list[tuple[SingularityClass, tuple[float, float]]]:
    """Exact locations of the non-cuspidal-edge points, v mapped into [0, 2*pi).

    Swallowtails sit where the phase parametrization meets the real axis
    of h (and, for spacelike axial direction, at the turning points of
    the curve); cross caps where the criteria value turns imaginary.
    """
    if t <= 0:
        raise ValueError("t must be positive")
    sw = SingularityClass.SWALLOWTAIL
    ccr = SingularityClass.CUSPIDAL_CROSS_CAP
    cs = SingularityClass.CUSPIDAL_S1_MINUS
    pts: list[tuple[SingularityClass, tuple[float, float]]] = []
    pts.append((sw, (math.log(1.0 + t), 0.0)))
    if abs(t - 1.0) > _T_BOUNDARY_TOL:
        if t < 1.0:
            pts.append((sw, (math.log(1.0 - t), math.pi)))
        else:
            pts.append((sw, (math.log(t - 1.0), 0.0)))
            vv = math.acos(math.sqrt(1.0 - 1.0 / (t * t)))
            uu = math.log(math.sqrt(t * t - 1.0))
            pts.append((sw, (uu, vv)))
            pts.append((sw, (uu, TWO_PI - vv)))
    q = t * t - 0.5
    if q > _T_BOUNDARY_TOL:
        r = math.sqrt(q)
        v_plus = math.acos(min(1.0, r / t))
        u_plus = math.log(r + math.sqrt(0.5))
        if t < 1.0 - _T_BOUNDARY_TOL:
            v_minus = math.acos(max(-1.0, -r / t))
            u_minus = math.log(math.sqrt(0.5) - r)
            for uu, vv in ((u_plus, v_plus), (u_minus, v_minus)):
                pts.append((ccr, (uu, vv)))
                pts.append((ccr, (uu, TWO_PI - vv)))
        elif abs(t - 1.0) <= _T_BOUNDARY_TOL:
            pts.append((ccr, (u_plus, v_plus)))
            pts.append((ccr, (u_plus, TWO_PI - v_plus)))
        else:
            u_minus = math.log(r - math.sqrt(0.5))
            for uu in (u_plus, u_minus):
                pts.append((ccr, (uu, v_plus)))
                pts.append((ccr, (uu, TWO_PI - v_plus)))
    if abs(t - 1.0 / math.sqrt(2.0)) <= _T_BOUNDARY_TOL:
        pts.append((cs, (-math.log(math.sqrt(2.0)), math.pi / 2.0)))
        pts.append((cs, (-math.log(math.sqrt(2.0)), 3.0 * math.pi / 2.0)))
    return pts
