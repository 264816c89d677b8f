"""Closed-form conformal factors of maximal surfaces with planar curvature lines.

The conformal factor rho(u, v) of such a surface satisfies the coupled system

    rho * (rho_uu + rho_vv) - (rho_u^2 + rho_v^2) + 1 = 0        (Gauss equation)
    rho_uv = 0                                                    (planarity)

whose solutions separate as rho_u = f(u), rho_v = g(v) with

    f_u^2 = (d - c) f^2 + c,    f_uu = (d - c) f,
    g_v^2 = (c - d) g^2 + d,    g_vv = (c - d) g,

for real constants (c, d), d >= 0, c^2 + d^2 != 0 (``Case1``), or rho linear
(``Case2``).  This module evaluates the closed forms normalized by f(0) = 1,
g(0) = 0 and provides the residuals of the equations above as independent
oracles.  rho may vanish or go negative; zeros of rho are the singular set.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Union

TWO_PI = 2.0 * math.pi

# Switch to the globally analytic form (f_u - g_v)/(d - c) when the primary
# quotient for rho degenerates to 0/0.
_RHO_DEGENERATE_TOL = 1e-12


@dataclass(frozen=True)
class Case1:
    """Separable solution family with constants (c, d), d >= 0, (c, d) != (0, 0)."""

    c: float
    d: float

    def __post_init__(self) -> None:
        if self.d < 0:
            raise ValueError(f"Case1 requires d >= 0, got d={self.d}")
        if self.c == 0.0 and self.d == 0.0:
            raise ValueError("Case1 requires c^2 + d^2 != 0")


@dataclass(frozen=True)
class Case2:
    """Linear solution rho = cos(phi) u + sin(phi) v, phi in [0, 2*pi)."""

    phi: float

    def __post_init__(self) -> None:
        if not (0.0 <= self.phi < TWO_PI):
            raise ValueError(f"Case2 requires phi in [0, 2*pi), got {self.phi}")


MetricFamily = Union[Case1, Case2]


@dataclass(frozen=True)
class MetricSample:
    """rho and its partials at one point; rho_u = f(u), rho_v = g(v)."""

    rho: float
    rho_u: float
    rho_v: float
    rho_uu: float
    rho_vv: float


def eval_f(fam: Case1, u: float) -> tuple[float, float, float]:
    """Evaluate (f, f_u, f_uu) of the normalized solution with f(0) = 1.

    For d > c the solution is cosh(k u) + (sqrt(d)/k) sinh(k u) with
    k = sqrt(d - c); for c > d the hyperbolic functions pass to circular
    ones through cosh(i x) = cos(x), keeping f real; for c = d the
    solution degenerates to sqrt(d) u + 1.
    """
    if not isinstance(fam, Case1):
        raise TypeError("eval_f is defined for Case1 families only")
    c, d = fam.c, fam.d
    sd = math.sqrt(d)
    k2 = d - c
    if k2 > 0:
        k = math.sqrt(k2)
        f = math.cosh(k * u) + (sd / k) * math.sinh(k * u)
        f_u = k * math.sinh(k * u) + sd * math.cosh(k * u)
    elif k2 < 0:
        k = math.sqrt(-k2)
        f = math.cos(k * u) + (sd / k) * math.sin(k * u)
        f_u = -k * math.sin(k * u) + sd * math.cos(k * u)
    else:
        return (sd * u + 1.0, sd, 0.0)
    return (f, f_u, k2 * f)


def eval_g(fam: Case1, v: float) -> tuple[float, float, float]:
    """Evaluate (g, g_v, g_vv) of the normalized solution with g(0) = 0.

    d = 0 gives g identically zero.
    """
    if not isinstance(fam, Case1):
        raise TypeError("eval_g is defined for Case1 families only")
    c, d = fam.c, fam.d
    sd = math.sqrt(d)
    k2 = d - c
    if k2 > 0:
        k = math.sqrt(k2)
        g = (sd / k) * math.sin(k * v)
        g_v = sd * math.cos(k * v)
    elif k2 < 0:
        k = math.sqrt(-k2)
        g = (sd / k) * math.sinh(k * v)
        g_v = sd * math.cosh(k * v)
    else:
        return (sd * v, sd, 0.0)
    return (g, g_v, -k2 * g)


def eval_rho(fam: MetricFamily, u: float, v: float) -> MetricSample:
    """Evaluate rho(u, v) and its partials.

    rho = (f^2 + g^2 - 1)/(f_u + g_v); for c != d this equals the
    globally analytic (f_u - g_v)/(d - c).  The quotient cancels
    catastrophically near interior zeros of its denominator, the
    analytic form near c = d; each evaluation picks the branch whose
    denominator is relatively larger, so rho is accurate everywhere
    (the two routes are cross-checked by tests, see ``rho_quotient``).
    """
    if isinstance(fam, Case2):
        cp, sp = math.cos(fam.phi), math.sin(fam.phi)
        return MetricSample(cp * u + sp * v, cp, sp, 0.0, 0.0)
    f, f_u, f_uu = eval_f(fam, u)
    g, g_v, g_vv = eval_g(fam, v)
    den = f_u + g_v
    dc = fam.d - fam.c
    if abs(den) * (1.0 + abs(fam.c) + abs(fam.d)) < abs(dc) * (1.0 + abs(f_u) + abs(g_v)):
        rho = (f_u - g_v) / dc
    else:
        rho = (f * f + g * g - 1.0) / den
    return MetricSample(rho, f, g, f_u, g_v)


def rho_quotient(fam: Case1, u: float, v: float) -> float:
    """The primary quotient (f^2 + g^2 - 1)/(f_u + g_v).

    Agrees with ``eval_rho`` wherever the denominator is away from zero;
    kept as an independent route.  Raises ZeroDivisionError at the
    removable 0/0 points (possible only for c != d).
    """
    f, f_u, _ = eval_f(fam, u)
    g, g_v, _ = eval_g(fam, v)
    den = f_u + g_v
    if abs(den) < _RHO_DEGENERATE_TOL:
        raise ZeroDivisionError(f"removable singularity of the quotient at ({u}, {v})")
    return (f * f + g * g - 1.0) / den


def gauss_residual(s: MetricSample) -> float:
    """Residual of the Gauss equation rho*(rho_uu + rho_vv) - (rho_u^2 + rho_v^2) + 1."""
    return s.rho * (s.rho_uu + s.rho_vv) - (s.rho_u**2 + s.rho_v**2) + 1.0


def ode_residuals_from_values(
    c: float,
    d: float,
    f: float,
    f_u: float,
    f_uu: float,
    g: float,
    g_v: float,
    g_vv: float,
) -> tuple[float, float, float, float]:
    """The four separated-equation residuals for explicit function values."""
    r1 = f_u**2 - (d - c) * f**2 - c
    r2 = f_uu - (d - c) * f
    r3 = g_v**2 - (c - d) * g**2 - d
    r4 = g_vv - (c - d) * g
    return (r1, r2, r3, r4)


def ode_residuals(fam: Case1, u: float, v: float) -> tuple[float, float, float, float]:
    """Residuals of the separated system at (u, v); all vanish for catalog families."""
    if not isinstance(fam, Case1):
        raise TypeError("ode_residuals is defined for Case1 families only")
    f, f_u, f_uu = eval_f(fam, u)
    g, g_v, g_vv = eval_g(fam, v)
    return ode_residuals_from_values(fam.c, fam.d, f, f_u, f_uu, g, g_v, g_vv)


# Representative (c, d) / phi descriptors covering every qualitative branch:
# c = d, c = 0, c < 0, d = 0, both orderings of c and d, and both linear cases.
STANDARD_METRIC_FAMILIES: tuple[MetricFamily, ...] = (
    Case1(1.0, 0.0),
    Case1(-1.0, 0.0),
    Case1(0.0, 1.0),
    Case1(1.0, 1.0),
    Case1(0.6, 0.8),
    Case1(-0.6, 0.8),
    Case1(2.0, 0.5),
    Case1(0.5, 2.0),
    Case1(3.0, 3.0),
    Case1(-2.0, 1.0),
    Case2(0.0),
    Case2(math.pi / 2.0),
)
