"""Numerical Weierstrass integral along axis-aligned paths.

Composite Gauss-Legendre quadrature of the representation integrand,
with interval doubling until two successive refinements agree.  The
integrands are holomorphic wherever eta absorbs the poles of h, so the
result is path independent; that independence is exercised by tests
rather than assumed here.
"""

from __future__ import annotations

import math
from functools import lru_cache

import numpy as np

from .errors import PoleError, PoleOnPathError, QuadratureDivergence
from .families import SurfaceFamily
from .lorentz import LVec3


@lru_cache(maxsize=16)
def _gl_nodes(n: int) -> tuple[tuple[float, ...], tuple[float, ...]]:
    x, w = np.polynomial.legendre.leggauss(n)
    return tuple(float(v) for v in x), tuple(float(v) for v in w)


def _composite(fam: SurfaceFamily, a: complex, b: complex, pieces: int, n_nodes: int):
    """Componentwise integral of the integrand over [a, b] split into pieces."""
    nodes, weights = _gl_nodes(n_nodes)
    dz = b - a
    acc = [0.0j, 0.0j, 0.0j]
    for k in range(pieces):
        s0 = k / pieces
        s1 = (k + 1) / pieces
        mid = 0.5 * (s0 + s1)
        half = 0.5 * (s1 - s0)
        for x, w in zip(nodes, weights):
            z = a + dz * (mid + half * x)
            try:
                w1, w2, w3 = fam.integrand(z)
            except PoleError as exc:
                raise PoleOnPathError(f"integration path passes a pole at z = {z}") from exc
            scale = w * half
            acc[0] += scale * w1
            acc[1] += scale * w2
            acc[2] += scale * w3
    return (acc[0] * dz, acc[1] * dz, acc[2] * dz)


def _segment(fam, a: complex, b: complex, n_nodes: int, tol: float, max_doublings: int):
    if a == b:
        return (0.0j, 0.0j, 0.0j)
    pieces = max(1, math.ceil(abs(b - a)))
    prev = None
    for _ in range(max_doublings + 1):
        val = _composite(fam, a, b, pieces, n_nodes)
        if prev is not None and max(abs(val[i] - prev[i]) for i in range(3)) < tol:
            return val
        prev = val
        pieces *= 2
    raise QuadratureDivergence(
        f"quadrature on [{a}, {b}] did not stabilize below {tol} after {max_doublings} doublings"
    )


def integrate_surface(
    fam: SurfaceFamily,
    z0: complex,
    z: complex,
    n_nodes: int = 16,
    tol: float = 1e-10,
    max_doublings: int = 8,
) -> LVec3:
    """Re Integral of the representation integrand from z0 to z.

    The path is the axis-aligned staircase z0 -> Re(z) + i Im(z0) -> z.
    Returns the position difference X(z) - X(z0).

    Parameters
    ----------
    n_nodes : int
        Gauss-Legendre nodes per composite piece, at least 8.
    tol : float
        Agreement required between successive interval doublings.
    """
    if n_nodes < 8:
        raise ValueError("n_nodes must be at least 8")
    corner = complex(z.real, z0.imag)
    total = [0.0j, 0.0j, 0.0j]
    for a, b in ((z0, corner), (corner, z)):
        seg = _segment(fam, a, b, n_nodes, tol, max_doublings)
        for i in range(3):
            total[i] += seg[i]
    return LVec3(total[0].real, total[1].real, total[2].real)
