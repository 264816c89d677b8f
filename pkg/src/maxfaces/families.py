"""Catalog of maximal surfaces with planar curvature lines.

Every family is described by Weierstrass data (h, eta dz) generating the
surface through

    X = Re Integral (1 + h^2, i (1 - h^2), -2 h) eta dz,

and by an explicitly integrated holomorphic primitive F with X = Re F.
The two routes are implemented independently: ``weierstrass_jet`` /
``integrand`` evaluate h and eta, while ``primitive`` and its hand
differentiated ``primitive_d`` / ``primitive_dd`` carry the closed forms.
Their agreement is a tested property, not an assumption.

Partial derivatives of a surface X = Re F(z), z = u + iv, follow from
holomorphy:  X_u = Re F', X_v = -Im F', X_uu = Re F'', X_uv = -Im F'',
X_vv = -Re F''.

The families:

* ``Theta(theta)``   one-parameter sweep, theta in [-pi/2, pi/2], covering
  the catenoid with spacelike axis (theta = pi/2), Bonnet-type surfaces
  with spacelike axial direction, the Enneper-type surface (theta = pi/4),
  the Bonnet-type surface with lightlike axial direction (theta = 0),
  Bonnet-type surfaces with timelike axial direction, and the catenoid
  with timelike axis (theta = -pi/2).
* ``Lambda(lam)``    the catenoid with lightlike axis and its associated
  family, |lam| = 1; the metric factor is rho = u.
* ``CatLight(delta)``  deformation path from the lightlike-axial
  Bonnet-type surface (delta = 1) toward the lightlike-axis catenoid
  (delta -> 0).
* ``PlaneDef(psi)``  deformation path from the plane (psi = -pi/4) to the
  catenoid with spacelike axis (psi = 0); the printed surface carries a
  homothety factor cos(2 psi), folded into eta here so both routes match.
* ``Bonnet(t)``      h = e^z - t, eta = e^{-z}/2, t > 0; the normal form
  used for the singularity analysis.

``eta_factor`` is a unit-modulus multiplier on eta realizing the
associated family; -i gives the conjugate surface.
"""

from __future__ import annotations

import abc
import cmath
import math
from dataclasses import dataclass, replace

from .errors import InvalidFamilyParameter, NotUnitModulus, PoleError
from .lorentz import LVec3
from .metric import Case1, Case2, MetricFamily, MetricSample, eval_rho

CHART_EPS = 1e-12
POLE_TOL = 1e-8

_Triple = tuple[complex, complex, complex]


@dataclass(frozen=True)
class WJet:
    """Weierstrass data values at one point z."""

    h: complex
    h_z: complex
    h_zz: complex
    eta: complex
    eta_z: complex


@dataclass(frozen=True)
class SurfacePoint:
    """Position and analytic partials of a catalog surface at (u, v)."""

    X: LVec3
    X_u: LVec3
    X_v: LVec3
    X_uu: LVec3
    X_uv: LVec3
    X_vv: LVec3


@dataclass(frozen=True)
class PairedMetric:
    """Conformal-factor family matching a catalog chart.

    The chart coordinate u equals the metric coordinate plus ``u_shift``,
    so the chart's squared conformal factor at (u, v) is
    rho(u - u_shift, v)^2.
    """

    family: MetricFamily
    u_shift: float = 0.0

    def sample(self, u: float, v: float) -> MetricSample:
        return eval_rho(self.family, u - self.u_shift, v)


def _check_unit(value: complex, what: str) -> None:
    if abs(abs(value) - 1.0) > 1e-9:
        raise InvalidFamilyParameter(f"{what} must have unit modulus, got |{what}| = {abs(value)}")


class SurfaceFamily(abc.ABC):
    """Common surface-family interface; concrete families are frozen dataclasses."""

    eta_factor: complex

    # -- data routes -------------------------------------------------------

    @abc.abstractmethod
    def _jet_base(self, z: complex) -> tuple[complex, complex, complex, complex, complex]:
        """(h, h_z, h_zz, eta, eta_z) without the associated-family factor."""

    @abc.abstractmethod
    def _primitive(self, z: complex) -> _Triple:
        """Holomorphic primitive F of the representation integrand."""

    @abc.abstractmethod
    def _primitive_d(self, z: complex) -> _Triple:
        """F'(z), hand differentiated from the closed form."""

    @abc.abstractmethod
    def _primitive_dd(self, z: complex) -> _Triple:
        """F''(z)."""

    def _mu(self) -> complex:
        return self.eta_factor

    def weierstrass_jet(self, z: complex) -> WJet:
        h, h_z, h_zz, eta, eta_z = self._jet_base(z)
        mu = self._mu()
        return WJet(h, h_z, h_zz, mu * eta, mu * eta_z)

    def integrand(self, z: complex) -> _Triple:
        """Representation integrand (1 + h^2, i(1 - h^2), -2h) eta from the jet."""
        jet = self.weierstrass_jet(z)
        h, eta = jet.h, jet.eta
        return ((1.0 + h * h) * eta, 1j * (1.0 - h * h) * eta, -2.0 * h * eta)

    def primitive(self, z: complex) -> _Triple:
        mu = self._mu()
        f1, f2, f3 = self._primitive(z)
        return (mu * f1, mu * f2, mu * f3)

    def primitive_d(self, z: complex) -> _Triple:
        mu = self._mu()
        f1, f2, f3 = self._primitive_d(z)
        return (mu * f1, mu * f2, mu * f3)

    def primitive_dd(self, z: complex) -> _Triple:
        mu = self._mu()
        f1, f2, f3 = self._primitive_dd(z)
        return (mu * f1, mu * f2, mu * f3)

    # -- evaluation --------------------------------------------------------

    def position(self, u: float, v: float) -> LVec3:
        f = self.primitive(complex(u, v))
        return LVec3(f[0].real, f[1].real, f[2].real)

    def point(self, u: float, v: float) -> SurfacePoint:
        z = complex(u, v)
        f = self.primitive(z)
        fd = self.primitive_d(z)
        fdd = self.primitive_dd(z)
        return SurfacePoint(
            X=LVec3(f[0].real, f[1].real, f[2].real),
            X_u=LVec3(fd[0].real, fd[1].real, fd[2].real),
            X_v=LVec3(-fd[0].imag, -fd[1].imag, -fd[2].imag),
            X_uu=LVec3(fdd[0].real, fdd[1].real, fdd[2].real),
            X_uv=LVec3(-fdd[0].imag, -fdd[1].imag, -fdd[2].imag),
            X_vv=LVec3(-fdd[0].real, -fdd[1].real, -fdd[2].real),
        )

    # -- structure ---------------------------------------------------------

    @property
    def hopf(self) -> complex:
        """Hopf differential factor; -1/2 scaled by the associated-family factor."""
        return -0.5 * self._mu()

    def paired_metric(self) -> PairedMetric | None:
        """Conformal-factor family whose rho^2 equals this chart's metric, if normalized."""
        return None

    def metric_data(self, u: float, v: float) -> MetricSample | None:
        """Conformal factor data of the homothety-normalized representative."""
        pm = self.paired_metric()
        return None if pm is None else pm.sample(u, v)

    def gw_scale(self) -> float:
        """Homothety between this chart and its normalized representative."""
        return 1.0

    @abc.abstractmethod
    def tag(self) -> str:
        """Classification tag: P, E, C_S, C_T, C_L, B_S, B_L, B_T (with Bonnet subtypes)."""

    @abc.abstractmethod
    def describe(self) -> dict:
        """Stable plain-data descriptor (for reports and manifests)."""


# ---------------------------------------------------------------------------
# theta sweep
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class Theta(SurfaceFamily):
    """One-parameter family for theta in [-pi/2, pi/2].

    Charts: tangent chart on (pi/4, pi/2], Enneper-type chart at exactly
    pi/4, exponential chart on (-pi/2, pi/4), dedicated catenoid chart at
    -pi/2 where the exponential chart degenerates.
    """

    theta: float
    eta_factor: complex = 1.0 + 0.0j

    def __post_init__(self) -> None:
        if not (-math.pi / 2 - CHART_EPS <= self.theta <= math.pi / 2 + CHART_EPS):
            raise InvalidFamilyParameter(f"theta must lie in [-pi/2, pi/2], got {self.theta}")
        _check_unit(self.eta_factor, "eta_factor")

    def _chart(self) -> str:
        if abs(self.theta + math.pi / 2) < CHART_EPS:
            return "CT"
        if abs(self.theta - math.pi / 4) < CHART_EPS:
            return "E"
        return "A" if self.theta > math.pi / 4 else "B"

    def _a_consts(self) -> tuple[float, float, float]:
        # a3 = atan(sqrt(tan(theta) - 1)) rewritten as atan2(a1, sqrt(cos)) so the
        # endpoint theta = pi/2 evaluates exactly.
        if abs(self.theta - math.pi / 2) < CHART_EPS:
            return 1.0, 1.0, math.pi / 2
        st, ct = math.sin(self.theta), math.cos(self.theta)
        a1 = math.sqrt(st - ct)
        a2 = math.sqrt(ct) + math.sqrt(st)
        a3 = math.atan2(a1, math.sqrt(ct))
        return a1, a2, a3

    def _b_consts(self) -> tuple[float, float]:
        st, ct = math.sin(self.theta), math.cos(self.theta)
        b1 = math.sqrt(ct - st)
        b2 = 1.0 + b1 / math.sqrt(ct)
        return b1, b2

    def _jet_base(self, z):
        chart = self._chart()
        if chart == "A":
            a1, a2, a3 = self._a_consts()
            w = 0.5 * (a1 * z + a3)
            cw = cmath.cos(w)
            if abs(cw) < POLE_TOL:
                raise PoleError(f"tangent chart pole near z = {z}")
            sw = cmath.sin(w)
            return (
                a2 * sw / (a1 * cw),
                a2 / (2.0 * cw * cw),
                a1 * a2 * sw / (2.0 * cw**3),
                cw * cw / a2,
                -a1 * sw * cw / a2,
            )
        if chart == "E":
            q = 2.0 ** -0.25
            return (q * z + 1.0, q, 0.0j, 2.0 ** -0.75, 0.0j)
        if chart == "B":
            b1, b2 = self._b_consts()
            ep = cmath.exp(b1 * z)
            h_z = b1 * b2 * ep / (b2 - 1.0)
            eta = (b2 - 1.0) * cmath.exp(-b1 * z) / (2.0 * b1 * b2)
            return ((b2 * ep - 1.0) / (b2 - 1.0), h_z, b1 * h_z, eta, -b1 * eta)
        ez = cmath.exp(z)
        eta = 0.5 * cmath.exp(-z)
        return (ez, ez, ez, eta, -eta)

    def _primitive(self, z):
        chart = self._chart()
        if chart == "A":
            a1, a2, a3 = self._a_consts()
            s = cmath.sin(a1 * z + a3)
            c = cmath.cos(a1 * z + a3)
            p, m = a1 * a1 + a2 * a2, a1 * a1 - a2 * a2
            den = 2.0 * a1**3 * a2
            return (
                (p * a1 * z + m * (s - math.sin(a3))) / den,
                1j * (m * a1 * z + p * (s - math.sin(a3))) / den,
                (c - math.cos(a3)) / (a1 * a1),
            )
        if chart == "E":
            zh = 2.0 ** -0.25 * z + 1.0
            r2 = math.sqrt(2.0)
            return (
                (zh**3 / 3.0 + zh - 4.0 / 3.0) / r2,
                -1j * (zh**3 / 3.0 - zh + 2.0 / 3.0) / r2,
                (1.0 - zh * zh) / r2,
            )
        if chart == "B":
            b1, b2 = self._b_consts()
            em = cmath.exp(-b1 * z)
            ep = cmath.exp(b1 * z)
            q = (b2 - 1.0) ** 2
            den = 2.0 * b1 * b1 * b2 * (b2 - 1.0)
            return (
                ((q + 1.0) * (1.0 - em) + b2 * b2 * (ep - 1.0) - 2.0 * b1 * b2 * z) / den,
                1j * ((q - 1.0) * (1.0 - em) - b2 * b2 * (ep - 1.0) + 2.0 * b1 * b2 * z) / den,
                ((1.0 - em) - b1 * b2 * z) / (b1 * b1 * b2),
            )
        return (cmath.sinh(z), -1j * (cmath.cosh(z) - 1.0), -z)

    def _primitive_d(self, z):
        chart = self._chart()
        if chart == "A":
            a1, a2, a3 = self._a_consts()
            s = cmath.sin(a1 * z + a3)
            c = cmath.cos(a1 * z + a3)
            p, m = a1 * a1 + a2 * a2, a1 * a1 - a2 * a2
            den = 2.0 * a1 * a1 * a2
            return ((p + m * c) / den, 1j * (m + p * c) / den, -s / a1)
        if chart == "E":
            zh = 2.0 ** -0.25 * z + 1.0
            q = 2.0 ** -0.75
            return (q * (1.0 + zh * zh), 1j * q * (1.0 - zh * zh), -2.0 * q * zh)
        if chart == "B":
            b1, b2 = self._b_consts()
            em = cmath.exp(-b1 * z)
            ep = cmath.exp(b1 * z)
            q = (b2 - 1.0) ** 2
            den = 2.0 * b1 * b2 * (b2 - 1.0)
            return (
                ((q + 1.0) * em + b2 * b2 * ep - 2.0 * b2) / den,
                1j * ((q - 1.0) * em - b2 * b2 * ep + 2.0 * b2) / den,
                (em - b2) / (b1 * b2),
            )
        return (cmath.cosh(z), -1j * cmath.sinh(z), -1.0 + 0j)

    def _primitive_dd(self, z):
        chart = self._chart()
        if chart == "A":
            a1, a2, a3 = self._a_consts()
            s = cmath.sin(a1 * z + a3)
            c = cmath.cos(a1 * z + a3)
            p, m = a1 * a1 + a2 * a2, a1 * a1 - a2 * a2
            den = 2.0 * a1 * a2
            return (-m * s / den, -1j * p * s / den, -c)
        if chart == "E":
            zh = 2.0 ** -0.25 * z + 1.0
            return (zh, -1j * zh, -1.0 + 0j)
        if chart == "B":
            b1, b2 = self._b_consts()
            em = cmath.exp(-b1 * z)
            ep = cmath.exp(b1 * z)
            q = (b2 - 1.0) ** 2
            den = 2.0 * b2 * (b2 - 1.0)
            return (
                (-(q + 1.0) * em + b2 * b2 * ep) / den,
                1j * (-(q - 1.0) * em - b2 * b2 * ep) / den,
                -em / b2,
            )
        return (cmath.sinh(z), -1j * cmath.cosh(z), 0.0j)

    def paired_metric(self) -> PairedMetric:
        c, d = math.sin(self.theta), math.cos(self.theta)
        if abs(c) < 1e-15:
            c = 0.0
        if abs(d) < 1e-15:
            d = 0.0
        return PairedMetric(Case1(c, d))

    def tag(self) -> str:
        th = self.theta
        if abs(th - math.pi / 2) < CHART_EPS:
            return "C_S"
        if abs(th - math.pi / 4) < CHART_EPS:
            return "E"
        if abs(th) < CHART_EPS:
            return "B_L"
        if abs(th + math.pi / 2) < CHART_EPS:
            return "C_T"
        return "B_S" if th > 0 else "B_T"

    def describe(self) -> dict:
        return {"family": "theta", "theta": self.theta, "eta_factor": _cstr(self.eta_factor), "tag": self.tag()}


# ---------------------------------------------------------------------------
# catenoid with lightlike axis and its associated family
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class Lambda(SurfaceFamily):
    """Lightlike-axis catenoid family; lam is the associated-family base point."""

    lam: complex = 1.0 + 0.0j
    eta_factor: complex = 1.0 + 0.0j

    def __post_init__(self) -> None:
        _check_unit(self.lam, "lam")
        _check_unit(self.eta_factor, "eta_factor")

    def _mu(self) -> complex:
        return self.eta_factor / (self.lam * self.lam)

    def _jet_base(self, z):
        w = z - 1.0
        if abs(w) < POLE_TOL:
            raise PoleError(f"pole of h at z = 1 (got z = {z})")
        return (-(1.0 + z) / w, 2.0 / (w * w), -4.0 / w**3, w * w / 4.0, w / 2.0)

    def _primitive(self, z):
        return ((z**3 / 3.0 + z) / 2.0, -1j * z * z / 2.0, (z**3 / 3.0 - z) / 2.0)

    def _primitive_d(self, z):
        return ((z * z + 1.0) / 2.0, -1j * z, (z * z - 1.0) / 2.0)

    def _primitive_dd(self, z):
        return (z, -1j + 0j, z)

    def paired_metric(self) -> PairedMetric:
        # The induced metric is rho = u in these coordinates for every lam.
        return PairedMetric(Case2(0.0))

    def tag(self) -> str:
        return "C_L"

    def describe(self) -> dict:
        return {"family": "lambda", "lam": _cstr(self.lam), "eta_factor": _cstr(self.eta_factor), "tag": self.tag()}


# ---------------------------------------------------------------------------
# deformation toward the lightlike-axis catenoid
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class CatLight(SurfaceFamily):
    """Deformation family on delta in (0, 1].

    delta = 1 reproduces Theta(0); the delta -> 0 limit is Lambda(1).
    Values of delta below ~1e-3 lose accuracy to cancellation in the
    closed forms; the limit endpoint is served by Lambda(1).
    """

    delta: float
    eta_factor: complex = 1.0 + 0.0j

    def __post_init__(self) -> None:
        if not (0.0 < self.delta <= 1.0):
            raise InvalidFamilyParameter(f"delta must lie in (0, 1], got {self.delta}")
        _check_unit(self.eta_factor, "eta_factor")

    def _jet_base(self, z):
        d = self.delta
        ep = cmath.exp(d * z)
        den = (d - 1.0) * ep + 1.0
        if abs(den) < POLE_TOL:
            raise PoleError(f"pole of h near z = {z}")
        h = ((d + 1.0) * ep - 1.0) / den
        h_z = 2.0 * d * d * ep / (den * den)
        h_zz = 2.0 * d**3 * ep * (1.0 - (d - 1.0) * ep) / den**3
        eta = den * den / (4.0 * d * d * ep)
        eta_z = den * ((d - 1.0) * ep - 1.0) / (4.0 * d * ep)
        return (h, h_z, h_zz, eta, eta_z)

    def _primitive(self, z):
        d = self.delta
        ep = cmath.exp(d * z)
        em = cmath.exp(-d * z)
        return (
            ((d * d + 1.0) * ep - em - 2.0 * d * z - d * d) / (2.0 * d**3),
            -1j * (ep - d * z - 1.0) / (d * d),
            (-(d * d - 1.0) * ep - em - 2.0 * d * z + d * d) / (2.0 * d**3),
        )

    def _primitive_d(self, z):
        d = self.delta
        ep = cmath.exp(d * z)
        em = cmath.exp(-d * z)
        return (
            ((d * d + 1.0) * ep + em - 2.0) / (2.0 * d * d),
            -1j * (ep - 1.0) / d,
            (-(d * d - 1.0) * ep + em - 2.0) / (2.0 * d * d),
        )

    def _primitive_dd(self, z):
        d = self.delta
        ep = cmath.exp(d * z)
        em = cmath.exp(-d * z)
        return (
            ((d * d + 1.0) * ep - em) / (2.0 * d),
            -1j * ep,
            (-(d * d - 1.0) * ep - em) / (2.0 * d),
        )

    def paired_metric(self) -> PairedMetric:
        return PairedMetric(Case1(0.0, self.delta * self.delta))

    def tag(self) -> str:
        return "B_L"

    def describe(self) -> dict:
        return {"family": "cat_light", "delta": self.delta, "eta_factor": _cstr(self.eta_factor), "tag": self.tag()}


# ---------------------------------------------------------------------------
# deformation from the plane to the spacelike-axis catenoid
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class PlaneDef(SurfaceFamily):
    """Deformation family on psi in [-pi/4, 0]; psi = -pi/4 is the plane.

    The parametrization carries the homothety factor cos(2 psi); eta is
    scaled by the same factor so the integrand generates exactly the
    printed surface.
    """

    psi: float
    eta_factor: complex = 1.0 + 0.0j

    def __post_init__(self) -> None:
        if not (-math.pi / 4 - CHART_EPS <= self.psi <= CHART_EPS):
            raise InvalidFamilyParameter(f"psi must lie in [-pi/4, 0], got {self.psi}")
        _check_unit(self.eta_factor, "eta_factor")

    def _is_plane(self) -> bool:
        return abs(self.psi + math.pi / 4) < CHART_EPS

    def _consts(self) -> tuple[float, float, float, float]:
        cp, sp = math.cos(self.psi), math.sin(self.psi)
        omega = math.sqrt(math.cos(2.0 * self.psi))
        shift = 2.0 * self.psi + math.pi / 2
        return cp, sp, omega, shift

    def _jet_base(self, z):
        if self._is_plane():
            return (0.0j, 0.0j, 0.0j, math.sqrt(2.0) + 0j, 0.0j)
        cp, sp, omega, shift = self._consts()
        w = 0.5 * omega * (z + shift)
        cw = cmath.cos(w)
        if abs(cw) < POLE_TOL:
            raise PoleError(f"tangent chart pole near z = {z}")
        sw = cmath.sin(w)
        return (
            omega * sw / ((cp - sp) * cw),
            omega * omega / (2.0 * (cp - sp) * cw * cw),
            omega**3 * sw / (2.0 * (cp - sp) * cw**3),
            (cp - sp) * cw * cw,
            -(cp - sp) * omega * sw * cw,
        )

    def _primitive(self, z):
        if self._is_plane():
            r2 = math.sqrt(2.0)
            return (r2 * z, 1j * r2 * z, 1.0 + 0j)
        cp, sp, omega, shift = self._consts()
        s = cmath.sin(omega * (z + shift))
        c = cmath.cos(omega * (z + shift))
        return (cp * z - (sp / omega) * s, -1j * sp * z + (1j * cp / omega) * s, c)

    def _primitive_d(self, z):
        if self._is_plane():
            r2 = math.sqrt(2.0)
            return (r2 + 0j, 1j * r2, 0.0j)
        cp, sp, omega, shift = self._consts()
        c = cmath.cos(omega * (z + shift))
        return (cp - sp * c, -1j * sp + 1j * cp * c, -omega * cmath.sin(omega * (z + shift)))

    def _primitive_dd(self, z):
        if self._is_plane():
            return (0.0j, 0.0j, 0.0j)
        cp, sp, omega, shift = self._consts()
        s = cmath.sin(omega * (z + shift))
        return (omega * sp * s, -1j * omega * cp * s, -omega * omega * cmath.cos(omega * (z + shift)))

    def metric_data(self, u: float, v: float) -> MetricSample | None:
        # Normalized representative: f(0) = g(0) = 0 branch with
        # c = cos(psi)^2, d = sin(psi)^2.  The chart coordinate carries
        # the junction shift, so the metric functions are sampled at
        # u + shift; rho is that of the surface before the cos(2 psi)
        # homothety.
        if self._is_plane():
            return None
        cp, sp, omega, shift = self._consts()
        us = u + shift
        f = (cp / omega) * math.sin(omega * us)
        f_u = cp * math.cos(omega * us)
        g = (sp / omega) * math.sinh(omega * v)
        g_v = sp * math.cosh(omega * v)
        den = f_u + g_v
        if abs(den) < 1e-12:
            rho = (g_v - f_u) / (omega * omega)
        else:
            rho = (f * f + g * g - 1.0) / den
        return MetricSample(rho, f, g, f_u, g_v)

    def gw_scale(self) -> float:
        return math.cos(2.0 * self.psi) if not self._is_plane() else 0.0

    def tag(self) -> str:
        if self._is_plane():
            return "P"
        if abs(self.psi) < CHART_EPS:
            return "C_S"
        return "B_S"

    def describe(self) -> dict:
        return {"family": "plane_def", "psi": self.psi, "eta_factor": _cstr(self.eta_factor), "tag": self.tag()}


# ---------------------------------------------------------------------------
# Bonnet normal form
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class Bonnet(SurfaceFamily):
    """Bonnet family h = e^z - t, eta = e^{-z}/2, t > 0.

    The axial direction has squared norm t^2 - 1: timelike for t < 1,
    lightlike at t = 1, spacelike for t > 1.  The surface is 2*pi
    periodic in v.
    """

    t: float
    eta_factor: complex = 1.0 + 0.0j

    def __post_init__(self) -> None:
        if not self.t > 0.0:
            raise InvalidFamilyParameter(f"t must be positive, got {self.t}")
        _check_unit(self.eta_factor, "eta_factor")

    def _jet_base(self, z):
        ez = cmath.exp(z)
        eta = 0.5 * cmath.exp(-z)
        return (ez - self.t, ez, ez, eta, -eta)

    def _primitive(self, z):
        t = self.t
        ez = cmath.exp(z)
        em = cmath.exp(-z)
        return (
            ((1.0 + t * t) * (1.0 - em) + ez - 1.0 - 2.0 * t * z) / 2.0,
            1j * ((1.0 - t * t) * (1.0 - em) - ez + 1.0 + 2.0 * t * z) / 2.0,
            t * (1.0 - em) - z,
        )

    def _primitive_d(self, z):
        t = self.t
        ez = cmath.exp(z)
        em = cmath.exp(-z)
        return (
            ((1.0 + t * t) * em + ez - 2.0 * t) / 2.0,
            1j * ((1.0 - t * t) * em - ez + 2.0 * t) / 2.0,
            t * em - 1.0,
        )

    def _primitive_dd(self, z):
        t = self.t
        ez = cmath.exp(z)
        em = cmath.exp(-z)
        return (
            (-(1.0 + t * t) * em + ez) / 2.0,
            1j * ((t * t - 1.0) * em - ez) / 2.0,
            -t * em,
        )

    def paired_metric(self) -> PairedMetric:
        return PairedMetric(Case1(self.t * self.t - 1.0, self.t * self.t), u_shift=math.log(1.0 + self.t))

    def period(self) -> float:
        return 2.0 * math.pi

    def tag(self) -> str:
        s2 = 1.0 / math.sqrt(2.0)
        if abs(self.t - s2) < 1e-12:
            return "B_T2"
        if abs(self.t - 1.0) < 1e-12:
            return "B_L"
        if self.t < s2:
            return "B_T1"
        if self.t < 1.0:
            return "B_T3"
        return "B_S"

    def describe(self) -> dict:
        return {"family": "bonnet", "t": self.t, "eta_factor": _cstr(self.eta_factor), "tag": self.tag()}


# ---------------------------------------------------------------------------
# operations on families
# ---------------------------------------------------------------------------


def eval_weierstrass(fam: SurfaceFamily, z: complex) -> WJet:
    """Weierstrass data jet of a family at z; raises PoleError in tan charts."""
    return fam.weierstrass_jet(z)


def closed_form_surface(fam: SurfaceFamily, u: float, v: float) -> SurfacePoint:
    """Closed-form position and analytic partials at (u, v)."""
    return fam.point(u, v)


def associated_transform(fam: SurfaceFamily, lam: complex) -> SurfaceFamily:
    """Scale eta by lam^-2, producing the associated family member.

    Raises NotUnitModulus unless |lam| = 1 within 1e-12.
    """
    if abs(abs(lam) - 1.0) > 1e-12:
        raise NotUnitModulus(f"|lam| must be 1, got {abs(lam)}")
    return replace(fam, eta_factor=fam.eta_factor / (lam * lam))


def conjugate_data(fam: SurfaceFamily) -> SurfaceFamily:
    """Conjugate surface data: eta multiplied by -i, so Y = Im Integral(...)."""
    return replace(fam, eta_factor=fam.eta_factor * -1j)


def standard_catalog() -> list[SurfaceFamily]:
    """Representative members of every family and chart, used by the check suite."""
    return [
        Theta(math.pi / 2),
        Theta(1.2),
        Theta(math.pi / 4),
        Theta(0.5),
        Theta(0.0),
        Theta(-0.9),
        Theta(-math.pi / 2),
        Lambda(1.0 + 0j),
        Lambda(cmath.exp(1j * math.pi / 4)),
        CatLight(1.0),
        CatLight(0.6),
        PlaneDef(0.0),
        PlaneDef(-math.pi / 8),
        PlaneDef(-math.pi / 4),
        Bonnet(0.5),
        Bonnet(1.0 / math.sqrt(2.0)),
        Bonnet(0.85),
        Bonnet(1.0),
        Bonnet(2.0),
    ]


def _cstr(c: complex) -> str:
    return f"{c.real:.17g}{c.imag:+.17g}j"
