"""Eigenvalue bound evaluators and soundness comparisons."""

import numpy as np
import pytest

from magdirac import bounds, sphere


S3 = bounds.sphere3_data()


def test_friedrich_round_three_sphere():
    for t in np.linspace(-3, 3, 25):
        bv = bounds.friedrich(S3, t)
        assert bv.form == "squared" and not bv.vacuous
        assert bv.value == pytest.approx(0.75 * (3.0 - 4.0 * abs(t)), abs=1e-12)


def test_friedrich_uses_magnitude_of_coupling():
    assert bounds.friedrich(S3, -1.0).value == bounds.friedrich(S3, 1.0).value


def test_friedrich_vacuous_in_dimension_one():
    bv = bounds.friedrich(bounds.GeometricData(n=1, S=0.0, dEta_norm=0.0), 1.0)
    assert bv.vacuous and bv.value is None


def test_hijazi_round_three_sphere():
    for t in np.linspace(-2, 2, 17):
        bv = bounds.hijazi(S3, t)
        assert bv.form == "absolute"
        assert bv.value == pytest.approx(1.5 - abs(t), abs=1e-9)


def test_hijazi_vacuous_flags():
    low = bounds.GeometricData(n=2, yamabe=1.0, vol=1.0, eta_Ln=1.0)
    assert bounds.hijazi(low, 0.0).vacuous
    neg = bounds.GeometricData(n=3, yamabe=-1.0, vol=1.0, eta_Ln=1.0)
    assert bounds.hijazi(neg, 0.0).vacuous


def test_baer_round_two_sphere():
    s2 = bounds.GeometricData(n=2, chi=2, area=4.0 * np.pi, eta_Linf=1.0)
    bv = bounds.baer(s2, 0.0)
    assert bv.value == pytest.approx(1.0, abs=1e-12)
    assert bounds.baer(s2, 0.25).value == pytest.approx(0.75, abs=1e-12)
    torus2 = bounds.GeometricData(n=2, chi=0, area=1.0, eta_Linf=2.0)
    assert bounds.baer(torus2, 0.5).value == pytest.approx(-1.0, abs=1e-12)
    genus2 = bounds.GeometricData(n=2, chi=-2, area=1.0, eta_Linf=1.0)
    assert bounds.baer(genus2, 0.0).vacuous
    wrong_dim = bounds.GeometricData(n=3, chi=2, area=1.0, eta_Linf=1.0)
    assert bounds.baer(wrong_dim, 0.0).vacuous


def test_nodal_arithmetic_and_kernel_count():
    s2 = bounds.GeometricData(
        n=2, chi=2, area=4.0 * np.pi, int_dEta=2.0, eta_Linf=1.0
    )
    bv = bounds.nodal(s2, 1.0, nodal_count=3)
    expected = (2 * np.pi * 2 - 1.0 * 2.0 + 4 * np.pi * 3) / (4 * np.pi)
    assert bv.form == "squared"
    assert bv.value == pytest.approx(expected, abs=1e-12)
    with pytest.raises(ValueError):
        bounds.nodal(s2, 0.0)  # no nodal count anywhere
    assert bounds.kernel_nodal(-2) == 1.0
    assert bounds.kernel_nodal(2) == -1.0
    assert bounds.kernel_nodal(0) == 0.0


def test_basic_three_sphere_closed_form():
    for t in np.linspace(0, 10, 21):
        bv = bounds.basic(S3, t)
        assert bv.form == "first_positive"
        assert bv.value == pytest.approx(0.5 + np.sqrt(t * t + 4.0), abs=1e-12)
        assert bv.value == pytest.approx(sphere.lambda1_basic(t), abs=1e-12)


def test_basic_higher_odd_spheres():
    for n in (5, 7, 9):
        data = bounds.sphere_odd_data(n)
        for t in np.linspace(0, 8, 9):
            bv = bounds.basic(data, t)
            expected = -(n - 1) / 4.0 + np.sqrt(
                t * t + (n - 1) ** 2 * (n + 1) / (4.0 * (n - 2))
            )
            assert bv.form == "absolute"
            assert bv.value == pytest.approx(expected, abs=1e-10)


def test_basic_vacuous_for_negative_curvature():
    data = bounds.GeometricData(n=3, S=-1.0, oneill_b=1.0)
    assert bounds.basic(data, 0.0).vacuous


def test_sphere_odd_data_validation():
    with pytest.raises(ValueError):
        bounds.sphere_odd_data(4)
    with pytest.raises(ValueError):
        bounds.sphere_odd_data(3)


def test_diamagnetic_upper_sphere_values():
    lam, q = bounds.sasaki_q(1, 0.0, "top")
    assert (lam, q) == (1.5, 3.0)
    for t in np.linspace(-2, 2, 17):
        bv = bounds.diamagnetic_upper(lam, q, 1.0, t)
        assert bv.form == "upper_squared"
        assert bv.value == pytest.approx((1.5 - t) ** 2, abs=1e-12)
    lam, qb = bounds.sasaki_q(1, 0.0, "bottom")
    assert qb == -3.0
    with pytest.raises(ValueError):
        bounds.sasaki_q(2, 0.0, "bottom")  # bottom sector needs odd m
    with pytest.raises(ValueError):
        bounds.sasaki_q(1, 0.0, "middle")


def test_berger_q_agrees_with_round_case():
    lam, q = bounds.berger_q(6.0, "top")
    assert (lam, q) == (1.5, 3.0)
    lam, q = bounds.berger_q(6.0, "bottom")
    assert (lam, q) == (1.5, -3.0)
    lam, q = bounds.berger_q(2.0, "top")
    assert (lam, q) == (1.0, 2.0)


def test_compare_forms_and_equality():
    bv = bounds.BoundValue("demo", 2.0, "squared")
    rep = bounds.compare(bv, 2.5)
    assert rep.satisfied and not rep.equality
    assert rep.margin == pytest.approx(0.5)
    rep = bounds.compare(bv, 2.0 + 1e-12)
    assert rep.satisfied and rep.equality
    rep = bounds.compare(bv, 1.0)
    assert not rep.satisfied

    up = bounds.BoundValue("demo", 2.0, "upper_squared")
    assert bounds.compare(up, 1.5).satisfied
    assert not bounds.compare(up, 2.5).satisfied

    with pytest.raises(ValueError):
        bounds.compare(bounds.BoundValue("v", None, "squared", True, "no"), 1.0)
    with pytest.raises(ValueError):
        bounds.compare(bounds.BoundValue("w", 1.0, "sideways"), 1.0)


def test_missing_fields_raise():
    with pytest.raises(ValueError):
        bounds.friedrich(bounds.GeometricData(n=3), 0.0)
    with pytest.raises(ValueError):
        bounds.hijazi(bounds.GeometricData(n=3), 0.0)
    with pytest.raises(ValueError):
        bounds.basic(bounds.GeometricData(n=3, S=1.0), 0.0)


def test_torus_data_gives_trivial_friedrich():
    geo = bounds.torus_data(np.eye(2), np.array([0.5, 0.0]))
    assert geo.S == 0.0 and geo.dEta_norm == 0.0
    bv = bounds.friedrich(geo, 1.0)
    assert bv.value == 0.0
    assert geo.eta_Linf == pytest.approx(0.5)
    assert geo.vol == pytest.approx(1.0)


def test_soundness_against_exact_sphere_spectrum():
    for t in np.linspace(-4, 4, 33):
        lam1 = sphere.lambda1(t)
        assert bounds.compare(bounds.friedrich(S3, t), lam1**2).satisfied
        assert bounds.compare(bounds.hijazi(S3, t), lam1).satisfied
        assert bounds.compare(
            bounds.basic(S3, t), sphere.lambda1_basic(t)
        ).satisfied
        top = bounds.diamagnetic_upper(1.5, 3.0, 1.0, t)
        bot = bounds.diamagnetic_upper(1.5, -3.0, 1.0, t)
        best = min(top.value, bot.value)
        assert lam1**2 <= best + 1e-9
