"""Shared oracles and control surfaces for the test suite."""

from __future__ import annotations

import math

from maxfaces.lorentz import LVec3


def rk4_second_order(accel_coeff: float, y0: float, dy0: float, x_end: float, step: float) -> float:
    """Integrate y'' = accel_coeff * y from 0 to x_end with classical RK4.

    Independent oracle for the closed-form solutions of the separated
    equations; returns y(x_end).
    """
    n = max(1, round(abs(x_end) / step))
    h = x_end / n
    y, dy = y0, dy0

    def f(state):
        yy, dd = state
        return (dd, accel_coeff * yy)

    for _ in range(n):
        k1 = f((y, dy))
        k2 = f((y + 0.5 * h * k1[0], dy + 0.5 * h * k1[1]))
        k3 = f((y + 0.5 * h * k2[0], dy + 0.5 * h * k2[1]))
        k4 = f((y + h * k3[0], dy + h * k3[1]))
        y += h * (k1[0] + 2 * k2[0] + 2 * k3[0] + k4[0]) / 6.0
        dy += h * (k1[1] + 2 * k2[1] + 2 * k3[1] + k4[1]) / 6.0
    return y


class Hyperboloid:
    """Spacelike surface x1^2 + x2^2 - x0^2 = -1, x0 > 0; |H| = 1 everywhere.

    Non-maximal control surface for the mean-curvature check.
    """

    def position(self, u: float, v: float) -> LVec3:
        return LVec3(math.sinh(u) * math.cos(v), math.sinh(u) * math.sin(v), math.cosh(u))


class Helicoid:
    """Ruled surface whose u-coordinate curves are helices (not planar)."""

    def position(self, u: float, v: float) -> LVec3:
        r = 1.0 + v
        return LVec3(r * math.cos(u), r * math.sin(u), u)
