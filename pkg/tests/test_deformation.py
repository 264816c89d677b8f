import cmath
import math

import pytest

from maxfaces.deformation import DeformationStage, deformation_family, stage_parameter
from maxfaces.families import CatLight, Lambda, PlaneDef, Theta


def sup_diff(fa, fb, extent=1.0, n=9):
    worst = 0.0
    for i in range(n):
        for j in range(n):
            u = -extent + 2 * extent * i / (n - 1)
            v = -extent + 2 * extent * j / (n - 1)
            worst = max(worst, (fa.position(u, v) - fb.position(u, v)).euclid_norm())
    return worst


def test_stage_parameter_ranges():
    with pytest.raises(ValueError):
        deformation_family(DeformationStage.THETA_SWEEP, 1.2)
    fam = deformation_family(DeformationStage.PLANE_TO_CS, 0.0)
    assert isinstance(fam, PlaneDef) and fam.tag() == "P"
    fam = deformation_family(DeformationStage.THETA_SWEEP, 1.0)
    assert isinstance(fam, Theta) and fam.tag() == "C_T"
    fam = deformation_family(DeformationStage.TO_LIGHT_CAT, 1.0)
    assert isinstance(fam, Lambda)
    fam = deformation_family(DeformationStage.TO_LIGHT_CAT, 0.25)
    assert isinstance(fam, CatLight) and fam.delta == pytest.approx(0.75)


def test_junction_plane_to_cs_meets_theta_sweep():
    a = deformation_family(DeformationStage.PLANE_TO_CS, 1.0)
    b = deformation_family(DeformationStage.THETA_SWEEP, 0.0)
    assert sup_diff(a, b) < 1e-9


def test_junction_theta_sweep_meets_light_cat():
    a = deformation_family(DeformationStage.THETA_SWEEP, 0.5)  # theta = 0
    b = deformation_family(DeformationStage.TO_LIGHT_CAT, 0.0)  # delta = 1
    assert sup_diff(a, b) < 1e-9


def test_light_cat_limit_to_lambda():
    target = Lambda(1.0 + 0j)
    d1 = sup_diff(CatLight(1e-2), target, extent=0.5)
    d2 = sup_diff(CatLight(5e-3), target, extent=0.5)
    d3 = sup_diff(CatLight(2.5e-3), target, extent=0.5)
    assert d1 < 1e-3
    assert d2 < d1 and d3 < d2


def test_associated_loop():
    start = deformation_family(DeformationStage.ASSOCIATED_LOOP, 0.0)
    half = deformation_family(DeformationStage.ASSOCIATED_LOOP, 0.5)
    full = deformation_family(DeformationStage.ASSOCIATED_LOOP, 1.0)
    # mid-loop the eta factor is -1: the surface is the point reflection
    for u, v in ((0.7, 0.3), (1.2, -0.8)):
        assert (half.position(u, v) + start.position(u, v)).euclid_norm() < 1e-12
    # the loop closes: lam = -1 gives the same data as lam = 1
    assert sup_diff(full, start) < 1e-12
    # quarter-loop passes through the conjugate (eta factor -i)
    quarter = deformation_family(DeformationStage.ASSOCIATED_LOOP, 0.25)
    assert quarter._mu() == pytest.approx(-1j)


def test_stage_parameters_monotone():
    for stage in DeformationStage:
        params = [stage_parameter(stage, k / 8) for k in range(9)]
        deltas = [b - a for a, b in zip(params, params[1:])]
        assert all(d > 0 for d in deltas) or all(d < 0 for d in deltas)


def test_theta_sweep_frame_tags():
    tags = [deformation_family(DeformationStage.THETA_SWEEP, k / 4).tag() for k in range(5)]
    assert tags == ["C_S", "E", "B_L", "B_T", "C_T"]


def test_frame_distance_shrinks_with_more_frames():
    def max_consecutive_gap(n_frames):
        worst = 0.0
        fams = [deformation_family(DeformationStage.THETA_SWEEP, k / (n_frames - 1)) for k in range(n_frames)]
        for fa, fb in zip(fams, fams[1:]):
            worst = max(worst, sup_diff(fa, fb, extent=0.8, n=5))
        return worst

    g5, g9, g17 = max_consecutive_gap(5), max_consecutive_gap(9), max_consecutive_gap(17)
    assert g9 < g5 and g17 < g9
