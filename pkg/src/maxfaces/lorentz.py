"""Lorentz-Minkowski linear algebra for R^{2,1}.

Vectors live in R^3 with the indefinite inner product

    <(x1, x2, x0), (y1, y2, y0)> = x1*y1 + x2*y2 - x0*y0,

where x0 is the timelike coordinate.  All values are immutable plain
data and every operation is pure.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass


@dataclass(frozen=True)
class LVec3:
    """A vector in R^{2,1}; ``x0`` carries the minus sign of the metric."""

    x1: float
    x2: float
    x0: float

    def __add__(self, other: "LVec3") -> "LVec3":
        return LVec3(self.x1 + other.x1, self.x2 + other.x2, self.x0 + other.x0)

    def __sub__(self, other: "LVec3") -> "LVec3":
        return LVec3(self.x1 - other.x1, self.x2 - other.x2, self.x0 - other.x0)

    def __neg__(self) -> "LVec3":
        return LVec3(-self.x1, -self.x2, -self.x0)

    def __mul__(self, s: float) -> "LVec3":
        return LVec3(self.x1 * s, self.x2 * s, self.x0 * s)

    __rmul__ = __mul__

    def __truediv__(self, s: float) -> "LVec3":
        return LVec3(self.x1 / s, self.x2 / s, self.x0 / s)

    def as_tuple(self) -> tuple[float, float, float]:
        return (self.x1, self.x2, self.x0)

    def euclid_norm(self) -> float:
        """Euclidean norm of the coordinate triple (used only for scaling)."""
        return math.sqrt(self.x1 * self.x1 + self.x2 * self.x2 + self.x0 * self.x0)


ZERO = LVec3(0.0, 0.0, 0.0)
E1 = LVec3(1.0, 0.0, 0.0)
E2 = LVec3(0.0, 1.0, 0.0)
E0 = LVec3(0.0, 0.0, 1.0)


class Causality(enum.Enum):
    SPACELIKE = "spacelike"
    TIMELIKE = "timelike"
    LIGHTLIKE = "lightlike"


def minkowski_inner(a: LVec3, b: LVec3) -> float:
    """Indefinite inner product x1*y1 + x2*y2 - x0*y0."""
    return a.x1 * b.x1 + a.x2 * b.x2 - a.x0 * b.x0


def det3(a: LVec3, b: LVec3, c: LVec3) -> float:
    """Determinant of the 3x3 matrix with rows a, b, c in coordinate order (x1, x2, x0)."""
    return (
        a.x1 * (b.x2 * c.x0 - b.x0 * c.x2)
        - a.x2 * (b.x1 * c.x0 - b.x0 * c.x1)
        + a.x0 * (b.x1 * c.x2 - b.x2 * c.x1)
    )


def lorentz_cross(a: LVec3, b: LVec3) -> LVec3:
    """Lorentzian cross product, defined by <a x b, c> = det(a, b, c) for all c.

    The defining identity forces e1 x e2 = -e0; the product of two
    spacelike tangent vectors of a spacelike surface is timelike.
    """
    return LVec3(
        a.x2 * b.x0 - a.x0 * b.x2,
        a.x0 * b.x1 - a.x1 * b.x0,
        a.x2 * b.x1 - a.x1 * b.x2,
    )


def causality_of(v: LVec3, tol: float = 0.0) -> Causality:
    """Classify the sign of <v, v>, mapping |<v,v>| <= tol to lightlike.

    Parameters
    ----------
    v : LVec3
    tol : float
        Non-negative half-width of the lightlike band.  Use 0 for exact
        analytic constants, a small positive value for computed vectors.
    """
    if tol < 0:
        raise ValueError("tol must be non-negative")
    q = minkowski_inner(v, v)
    if abs(q) <= tol:
        return Causality.LIGHTLIKE
    return Causality.SPACELIKE if q > 0 else Causality.TIMELIKE
