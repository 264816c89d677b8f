import math

import pytest

from conftest import rk4_second_order
from maxfaces.metric import (
    Case1,
    Case2,
    STANDARD_METRIC_FAMILIES,
    eval_f,
    eval_g,
    eval_rho,
    gauss_residual,
    ode_residuals,
    ode_residuals_from_values,
    rho_quotient,
)


def grid(n=41, lo=-2.0, hi=2.0):
    return [lo + (hi - lo) * k / (n - 1) for k in range(n)]


def test_family_validation():
    with pytest.raises(ValueError):
        Case1(0.0, 0.0)
    with pytest.raises(ValueError):
        Case1(1.0, -0.5)
    with pytest.raises(ValueError):
        Case2(7.0)
    with pytest.raises(TypeError):
        eval_f(Case2(0.0), 1.0)


def test_f_initial_value_and_linear_branch():
    f, f_u, f_uu = eval_f(Case1(0.0, 1.0), 0.0)
    assert f == 1.0
    f, f_u, f_uu = eval_f(Case1(1.0, 1.0), 2.0)
    assert f == pytest.approx(3.0, abs=1e-15)
    assert f_uu == 0.0


def test_f_against_rk4():
    # f'' = (d - c) f, f(0) = 1, f'(0) = sqrt(d)
    for c, d in ((0.0, 1.0), (0.6, 0.8), (2.0, 0.5), (-1.0, 0.0)):
        fam = Case1(c, d)
        for u in (-2.0, -0.7, 0.3, 1.0, 2.0):
            expected = rk4_second_order(d - c, 1.0, math.sqrt(d), u, 1e-3)
            assert eval_f(fam, u)[0] == pytest.approx(expected, abs=1e-6)
    assert eval_f(Case1(0.0, 1.0), 1.0)[0] == pytest.approx(math.e, abs=1e-9)


def test_g_initial_value_and_rk4():
    for c, d in ((0.0, 1.0), (1.0, 1.0), (2.0, 0.5)):
        assert eval_g(Case1(c, d), 0.0)[0] == 0.0
    assert eval_g(Case1(1.0, 1.0), 3.0)[0] == pytest.approx(3.0, abs=1e-15)
    assert eval_g(Case1(0.0, 1.0), math.pi / 2)[0] == pytest.approx(1.0, abs=1e-12)
    for c, d in ((0.0, 1.0), (2.0, 0.5), (-0.6, 0.8)):
        fam = Case1(c, d)
        for v in (-1.5, 0.4, 2.0):
            expected = rk4_second_order(c - d, 0.0, math.sqrt(d), v, 1e-3)
            assert eval_g(fam, v)[0] == pytest.approx(expected, abs=1e-6)


def test_g_vanishes_when_d_zero():
    fam = Case1(-1.0, 0.0)
    for v in grid(9):
        g, g_v, g_vv = eval_g(fam, v)
        assert g == 0.0 and g_v == 0.0 and g_vv == 0.0


def test_rho_hand_oracle_linear_case():
    # c = d = 1: f = u + 1, g = v, rho = ((u+1)^2 + v^2 - 1)/2
    fam = Case1(1.0, 1.0)
    assert eval_rho(fam, 1.0, 0.0).rho == pytest.approx(1.5, abs=1e-15)
    for u in (-0.8, 0.0, 0.7):
        for v in (-1.1, 0.0, 2.0):
            expected = ((u + 1.0) ** 2 + v * v - 1.0) / 2.0
            assert eval_rho(fam, u, v).rho == pytest.approx(expected, abs=1e-14)


def test_rho_case2_linear():
    s = eval_rho(Case2(0.0), 0.37, 5.0)
    assert s.rho == 0.37 and s.rho_u == 1.0 and s.rho_v == 0.0
    s = eval_rho(Case2(math.pi / 2), 5.0, -0.2)
    assert s.rho == pytest.approx(-0.2) and s.rho_v == 1.0


def test_rho_at_origin_quotient_value():
    # f(0) = 1, f_u(0) = g_v(0) = sqrt(d): quotient (1 + 0 - 1)/2 = 0
    assert eval_rho(Case1(0.0, 1.0), 0.0, 0.0).rho == pytest.approx(0.0, abs=1e-15)


def test_rho_two_routes_agree():
    for fam in STANDARD_METRIC_FAMILIES:
        if not isinstance(fam, Case1):
            continue
        for u in grid(13):
            for v in grid(13):
                try:
                    q = rho_quotient(fam, u, v)
                except ZeroDivisionError:
                    continue
                r = eval_rho(fam, u, v).rho
                assert abs(q - r) <= 1e-8 * max(1.0, abs(q))


def test_gauss_residual_all_families():
    for fam in STANDARD_METRIC_FAMILIES:
        worst = max(
            abs(gauss_residual(eval_rho(fam, u, v))) for u in grid() for v in grid()
        )
        assert worst < 1e-10, fam


def test_gauss_residual_hand_values():
    from maxfaces.metric import MetricSample

    # rho = u^2 sampled at u = 1: 1*2 - 4 + 1 = -1
    assert gauss_residual(MetricSample(1.0, 2.0, 0.0, 2.0, 0.0)) == -1.0
    assert gauss_residual(eval_rho(Case2(math.pi / 2), 3.0, -1.0)) == 0.0


def test_ode_residuals():
    fam = Case1(0.0, 1.0)
    assert max(abs(r) for r in ode_residuals(fam, 0.3, 0.7)) < 1e-10
    # c = d: r1 = d - 0*f^2 - c = 0 exactly
    assert ode_residuals(Case1(1.0, 1.0), 0.87, -0.4)[0] == 0.0
    # perturbing f by 0.1 shifts r2 linearly
    f, f_u, f_uu = eval_f(fam, 0.0)
    r = ode_residuals_from_values(0.0, 1.0, f + 0.1, f_u, f_uu, 0.0, 1.0, 0.0)
    assert r[1] == pytest.approx(-0.1, abs=1e-14)


def test_separation_identity():
    # f_u^2 - g_v^2 = (d - c)(f^2 + g^2 - 1) for c != d
    for fam in STANDARD_METRIC_FAMILIES:
        if not isinstance(fam, Case1) or fam.c == fam.d:
            continue
        for u in grid(9):
            for v in grid(9):
                f, f_u, _ = eval_f(fam, u)
                g, g_v, _ = eval_g(fam, v)
                lhs = f_u * f_u - g_v * g_v
                rhs = (fam.d - fam.c) * (f * f + g * g - 1.0)
                assert abs(lhs - rhs) <= 1e-10 * max(1.0, abs(lhs))


def test_mixed_partial_vanishes():
    h = 1e-3
    for fam in STANDARD_METRIC_FAMILIES:
        for u in grid(11):
            for v in grid(11):
                mixed = (
                    eval_rho(fam, u + h, v + h).rho
                    - eval_rho(fam, u + h, v - h).rho
                    - eval_rho(fam, u - h, v + h).rho
                    + eval_rho(fam, u - h, v - h).rho
                ) / (4.0 * h * h)
                assert abs(mixed) < 1e-6


def test_rho_bounded_on_compact_grids():
    for fam in STANDARD_METRIC_FAMILIES:
        assert all(math.isfinite(eval_rho(fam, u, v).rho) for u in grid() for v in grid())
