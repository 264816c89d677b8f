"""The continuous deformation path through the whole catalog.

Four stages, each parametrized by s in [0, 1], joined at their endpoints:

    plane_to_cs     : psi = -pi/4 + s*pi/4   (plane -> spacelike-axis catenoid)
    theta_sweep     : theta = pi/2 - s*pi    (spacelike catenoid -> timelike catenoid)
    to_light_cat    : delta = 1 - s          (lightlike-axial Bonnet type -> lightlike catenoid)
    associated_loop : lam = exp(i pi s)      (associated family of the lightlike catenoid)

Stage junctions produce identical surfaces: plane_to_cs at s = 1 equals
theta_sweep at s = 0, theta_sweep at theta = 0 equals to_light_cat at
s = 0, and to_light_cat converges to associated_loop at s = 0 as s -> 1.
"""

from __future__ import annotations

import cmath
import enum
import math

from .families import CatLight, Lambda, PlaneDef, SurfaceFamily, Theta


class DeformationStage(enum.Enum):
    PLANE_TO_CS = "plane_to_cs"
    THETA_SWEEP = "theta_sweep"
    TO_LIGHT_CAT = "to_light_cat"
    ASSOCIATED_LOOP = "associated_loop"


def deformation_family(stage: DeformationStage, s: float) -> SurfaceFamily:
    """Family at position s in [0, 1] along the given stage."""
    if not (0.0 <= s <= 1.0):
        raise ValueError(f"stage parameter must lie in [0, 1], got {s}")
    if stage is DeformationStage.PLANE_TO_CS:
        return PlaneDef(-math.pi / 4 + s * math.pi / 4)
    if stage is DeformationStage.THETA_SWEEP:
        return Theta(math.pi / 2 - s * math.pi)
    if stage is DeformationStage.TO_LIGHT_CAT:
        delta = 1.0 - s
        if delta <= 0.0:
            return Lambda(1.0 + 0j)
        return CatLight(delta)
    if stage is DeformationStage.ASSOCIATED_LOOP:
        return Lambda(cmath.exp(1j * math.pi * s))
    raise ValueError(f"unknown stage {stage!r}")


def stage_parameter(stage: DeformationStage, s: float) -> float:
    """The family parameter value at position s (for manifests)."""
    if stage is DeformationStage.PLANE_TO_CS:
        return -math.pi / 4 + s * math.pi / 4
    if stage is DeformationStage.THETA_SWEEP:
        return math.pi / 2 - s * math.pi
    if stage is DeformationStage.TO_LIGHT_CAT:
        return 1.0 - s
    if stage is DeformationStage.ASSOCIATED_LOOP:
        return math.pi * s
    raise ValueError(f"unknown stage {stage!r}")
