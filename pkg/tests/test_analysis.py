import math
import random

import pytest

from conftest import Helicoid, Hyperboloid
from maxfaces.analysis import (
    axial_directions,
    fundamental_form,
    gauss_weingarten_residual,
    mean_curvature_fd,
    normal_from_metric,
    planarity_residual,
    unit_normal,
)
from maxfaces.errors import DivisionBySqrtZero, SingularPointError
from maxfaces.families import Bonnet, CatLight, Lambda, PlaneDef, Theta, standard_catalog
from maxfaces.lorentz import Causality, LVec3, causality_of, minkowski_inner
from maxfaces.metric import Case1
from maxfaces.verify import sample_nonsingular


def test_fundamental_form_lambda():
    fam = Lambda(1.0 + 0j)
    p0 = fam.point(0.0, 0.0)
    assert p0.X_u.as_tuple() == pytest.approx((0.5, 0.0, -0.5))
    assert p0.X_v.as_tuple() == pytest.approx((0.0, 0.0, 0.0))
    assert fundamental_form(p0).E == pytest.approx(0.0, abs=1e-15)  # singular point
    f = fundamental_form(fam.point(1.0, 0.0))
    assert (f.E, f.F, f.G) == pytest.approx((1.0, 0.0, 1.0), abs=1e-14)


def test_conformality_on_catalog():
    rng = random.Random(7)
    for fam in standard_catalog():
        for u, v in sample_nonsingular(fam, 12, rng):
            f = fundamental_form(fam.point(u, v))
            assert abs(f.F) < 1e-8 * max(f.E, 1.0)
            assert abs(f.E - f.G) < 1e-8 * max(f.E, 1e-12)


def test_unit_normal_lambda_closed_form():
    fam = Lambda(1.0 + 0j)
    for u, v in ((1.0, 0.0), (0.7, -0.9), (2.0, 1.3)):
        n = unit_normal(fam.point(u, v))
        expected = LVec3(
            (u * u + v * v - 1.0) / (2.0 * u), -v / u, (u * u + v * v + 1.0) / (2.0 * u)
        )
        sign = 1.0 if expected.x0 > 0 else -1.0
        assert n.as_tuple() == pytest.approx((sign * expected).as_tuple(), abs=1e-12)
        assert minkowski_inner(n, n) == pytest.approx(-1.0, abs=1e-12)


def test_unit_normal_contracts():
    rng = random.Random(3)
    for fam in standard_catalog():
        for u, v in sample_nonsingular(fam, 8, rng):
            p = fam.point(u, v)
            n = unit_normal(p)
            assert n.x0 > 0
            assert minkowski_inner(n, n) == pytest.approx(-1.0, abs=1e-12)
            assert abs(minkowski_inner(n, p.X_u)) < 1e-9 * max(1.0, p.X_u.euclid_norm())
            assert abs(minkowski_inner(n, p.X_v)) < 1e-9 * max(1.0, p.X_v.euclid_norm())


def test_unit_normal_singular_point():
    with pytest.raises(SingularPointError):
        unit_normal(Lambda(1.0 + 0j).point(0.0, 0.0))


def test_normal_from_metric_value():
    n = normal_from_metric(Case1(1.0, 1.0), 1.0, 0.0)
    assert n.as_tuple() == pytest.approx((-4.0 / 3.0, 0.0, 5.0 / 3.0), abs=1e-14)
    assert minkowski_inner(n, n) == pytest.approx(-1.0, abs=1e-14)


def test_normal_from_metric_errors():
    with pytest.raises(SingularPointError):
        normal_from_metric(Case1(1.0, 1.0), 0.0, 0.0)  # rho(0,0) = 0
    with pytest.raises(DivisionBySqrtZero):
        normal_from_metric(Case1(1.0, 0.0), 0.3, 0.1)
    with pytest.raises(ValueError):
        normal_from_metric(Case1(0.5, 2.0), 0.3, 0.1)  # needs c >= d


def test_normal_from_metric_unit_everywhere():
    fam = Case1(2.0, 0.5)
    for u in (-1.0, -0.2, 0.4, 1.3):
        for v in (-0.8, 0.1, 0.9):
            try:
                n = normal_from_metric(fam, u, v)
            except SingularPointError:
                continue
            assert minkowski_inner(n, n) == pytest.approx(-1.0, rel=1e-12)


def test_mean_curvature_examples():
    assert abs(mean_curvature_fd(Bonnet(2.0), 0.5, 1.0, 1e-3)) < 1e-5
    assert abs(mean_curvature_fd(Lambda(1.0 + 0j), 1.0, 1.0, 1e-3)) < 1e-5


def test_mean_curvature_step_convergence():
    for fam in (Bonnet(2.0), Theta(0.5)):
        h1 = abs(mean_curvature_fd(fam, 0.5, 1.0, 1e-3))
        h2 = abs(mean_curvature_fd(fam, 0.5, 1.0, 5e-4))
        assert h2 <= max(0.5 * h1, 5e-9)


def test_mean_curvature_nonmaximal_control():
    hyp = Hyperboloid()
    for u, v in ((0.6, 0.4), (1.0, 2.0)):
        assert abs(mean_curvature_fd(hyp, u, v, 1e-3)) == pytest.approx(1.0, abs=1e-5)


def test_planarity_examples():
    ru, rv = planarity_residual(Bonnet(1.0), 0.2, 0.3)
    assert abs(ru) < 1e-6 and abs(rv) < 1e-6
    import cmath

    ru, rv = planarity_residual(Lambda(cmath.exp(1j * math.pi / 4)), 1.0, 0.5)
    assert abs(ru) < 1e-6 and abs(rv) < 1e-6


def test_planarity_negative_control():
    ru, rv = planarity_residual(Helicoid(), 0.4, 0.2)
    assert abs(ru) > 1e-2  # helical coordinate curves are not planar


def test_gauss_weingarten_structure():
    rng = random.Random(11)
    for fam in (Bonnet(1.0), Theta(0.9), CatLight(0.6), PlaneDef(-math.pi / 8)):
        for u, v in sample_nonsingular(fam, 5, rng):
            ru, rv = gauss_weingarten_residual(fam, u, v)
            assert ru < 1e-6 and rv < 1e-6


def test_axial_norms_and_orthogonality():
    fam = Theta(1.2)
    ax = axial_directions(fam, 0.4, 0.9)
    assert ax.norm1 == pytest.approx(math.sin(1.2), abs=1e-9)
    assert ax.norm2 == pytest.approx(math.cos(1.2), abs=1e-9)
    assert abs(minkowski_inner(ax.v1, ax.v2)) < 1e-9


def test_axial_constancy():
    for fam in (Theta(1.2), Theta(-0.9), Bonnet(0.85), CatLight(0.6), PlaneDef(-math.pi / 8)):
        a = axial_directions(fam, 0.5, 0.8)
        b = axial_directions(fam, -0.3, 0.45)
        assert (a.v1 - b.v1).euclid_norm() < 1e-8
        if a.v2 is not None and b.v2 is not None:
            assert (a.v2 - b.v2).euclid_norm() < 1e-8


def test_axial_absent_directions():
    # catenoids have no second axial direction (d = 0)
    ax = axial_directions(Theta(math.pi / 2), 0.4, 0.8)
    assert ax.v2 is None and math.isnan(ax.norm2)
    ax = axial_directions(Lambda(1.0 + 0j), 1.3, 0.4)
    assert ax.v2 is None
    assert ax.norm1 == pytest.approx(0.0, abs=1e-12)
    assert ax.v1.as_tuple() == pytest.approx((1.0, 0.0, 1.0), abs=1e-10)


def test_axial_lambda_rotated_frame():
    import cmath

    fam = Lambda(cmath.exp(1j * math.pi / 4))
    a = axial_directions(fam, 1.0, 0.3)
    b = axial_directions(fam, 1.7, -0.9)
    assert (a.v1 - b.v1).euclid_norm() < 1e-9
    assert causality_of(a.v1, tol=1e-9) is Causality.LIGHTLIKE


def test_axial_bonnet_causality_flips_at_one():
    expected = {
        0.5: Causality.TIMELIKE,
        0.9: Causality.TIMELIKE,
        1.0: Causality.LIGHTLIKE,
        1.1: Causality.SPACELIKE,
        2.0: Causality.SPACELIKE,
    }
    for t, cls in expected.items():
        ax = axial_directions(Bonnet(t), 1.3, 0.7)
        assert ax.norm1 == pytest.approx(t * t - 1.0, abs=1e-9)
        assert causality_of(ax.v1, tol=1e-9) is cls


def test_axial_singular_point_raises():
    with pytest.raises(SingularPointError):
        axial_directions(Lambda(1.0 + 0j), 0.0, 0.5)


def test_axial_plane_unsupported():
    with pytest.raises(ValueError):
        axial_directions(PlaneDef(-math.pi / 4), 0.3, 0.3)
