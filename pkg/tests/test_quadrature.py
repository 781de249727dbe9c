import math

import numpy as np
import pytest

from hyperlap.errors import SlowDecayError, ValidityError
from hyperlap.gammafn import gamma, gamma_ratio, GammaRatioSpec
from hyperlap.laplace import (LaplaceCase, LaplaceId, closed_form, lhs_integrand,
                              transform_rhs_series)
from hyperlap.quadrature import (TailMethod, _PanelIntegrator, gamma_integral_check,
                                 laplace_numeric)
from hyperlap.series import HyperSeriesSpec

TRIVIAL = HyperSeriesSpec([], [], 1.0)


def test_plain_exponential():
    res = laplace_numeric(1.0, 1.0, 0.0, TRIVIAL, tol=1e-9)
    assert abs(res.value - 1.0) < 1e-10
    assert res.tail_method is TailMethod.EXP_DECAY
    assert res.abs_err_est < 1e-8
    assert res.nodes_used > 0


def test_endpoint_singularity():
    res = laplace_numeric(0.5, 2.0, 0.0, TRIVIAL, tol=1e-9)
    assert abs(res.value - math.sqrt(math.pi / 2.0)) < 1e-9


def test_gamma_three():
    res = laplace_numeric(3.0, 1.0, 0.0, TRIVIAL, tol=1e-9)
    assert abs(res.value - 2.0) < 2e-9


def test_exponential_shift():
    res = laplace_numeric(1.5, 2.0, 1.0, TRIVIAL, tol=1e-9)
    ref = gamma(1.5) * (2.0 - 1.0) ** -1.5
    assert abs(res.value - ref) <= 1e-9 * abs(ref)


def test_gamma_integral_check_against_ln_gamma_route():
    res = gamma_integral_check(2.5, 1.7)
    ref = gamma(2.5) * 1.7 ** -2.5
    assert abs(res.value - ref) <= 1e-9 * abs(ref)


def test_calibration_sweep():
    rng = np.random.default_rng(41)
    worst = 0.0
    for _ in range(100):
        alpha = rng.uniform(0.2, 6.0)
        s = rng.uniform(0.5, 5.0)
        res = gamma_integral_check(alpha, s)
        ref = gamma(alpha) * s ** -alpha
        worst = max(worst, abs(res.value - ref) / abs(ref))
    assert worst < 1e-9


def test_power_law_tail_against_gauss_sum():
    # 1F1 with s = w: the transform equals Gamma(v) s^-v 2F1(a, v; c; 1),
    # which Gauss's theorem turns into pure gamma functions
    for a, c, v, s in [(0.7, 3.1, 1.1, 2.0), (0.4, 2.6, 0.8, 1.0),
                       (1.2, 4.8, 1.9, 3.3)]:
        spec = HyperSeriesSpec([a], [c], 1.0)
        res = laplace_numeric(v, s, s, spec, tol=1e-7)
        ref = gamma(v) * s ** -v * gamma_ratio(
            GammaRatioSpec([c, c - a - v], [c - a, c - v]))
        assert res.tail_method is TailMethod.POWER_LAW_EXTRAPOLATION
        assert res.tail_contribution != 0.0
        assert abs(res.value - ref) <= 3e-7 * abs(ref)
        assert abs(res.value - ref) <= max(res.abs_err_est * 4, 1e-12 * abs(ref))


def test_alternating_integrand_uses_double_double():
    case = LaplaceCase(LaplaceId.KUMMERX_L, {"a": 1.2, "b": 0.6, "d": 1.4}, 2.2)
    integ = lhs_integrand(case)
    res = laplace_numeric(integ.power, case.s, integ.w, integ.spec, tol=1e-7)
    ref = closed_form(case).value
    assert abs(res.value - ref) <= 1e-6 * abs(ref)


def test_validity_and_slow_decay_errors():
    spec = HyperSeriesSpec([1.0], [2.0], 1.0)
    with pytest.raises(ValidityError):
        laplace_numeric(-1.0, 1.0, 0.0, spec)
    with pytest.raises(ValidityError):
        laplace_numeric(1.0, -1.0, 0.0, spec)
    with pytest.raises(ValidityError):
        laplace_numeric(1.0, 1.0, 0.0, HyperSeriesSpec([1, 2], [3], 0.5))
    with pytest.raises(ValidityError):
        laplace_numeric(1.0, 1.0, 2.0, spec)  # Re(w) >= Re(s)
    # s = w: rho = v - 1 + a - c; with a=1, c=2 rho = v - 2
    with pytest.raises(ValidityError):
        laplace_numeric(1.1, 1.0, 1.0, spec)   # rho = -0.9, diverges
    with pytest.raises(SlowDecayError):
        laplace_numeric(0.98, 1.0, 1.0, spec)  # rho = -1.02, too slow


def test_panel_additivity():
    integ = _PanelIntegrator(lambda u: np.exp(-u) * np.sin(u))
    whole, err_whole = integ.integrate(0.0, 8.0, 1e-12)
    left, err_left = integ.integrate(0.0, 3.1, 1e-12)
    right, err_right = integ.integrate(3.1, 8.0, 1e-12)
    assert abs(whole - (left + right)) <= err_whole + err_left + err_right + 1e-14


def test_monotone_refinement():
    case = LaplaceCase(LaplaceId.WATSON1X_L,
                       {"a": 0.8, "b": 1.1, "c": 1.3, "d": 2.0}, 2.0)
    integ = lhs_integrand(case)
    ref = transform_rhs_series(integ.power, case.s, integ.w, integ.spec, tol=1e-13)
    prev = None
    for tol in (1e-4, 5e-5, 2.5e-5, 1.25e-5, 1e-6, 1e-7):
        res = laplace_numeric(integ.power, case.s, integ.w, integ.spec, tol=tol)
        disc = abs(res.value - ref)
        if prev is not None:
            assert disc <= prev + 1e-12 * abs(ref)
        prev = disc


def test_quadrature_matches_closed_form_spec_example():
    case = LaplaceCase(LaplaceId.WATSON1X_L,
                       {"a": 0.8, "b": 1.1, "c": 1.3, "d": 2.0}, 2.0)
    integ = lhs_integrand(case)
    res = laplace_numeric(integ.power, case.s, integ.w, integ.spec, tol=1e-7)
    ref = closed_form(case).value
    assert abs(res.value - ref) <= 1e-5 * abs(ref)


def test_result_fields_are_plain_python():
    res = gamma_integral_check(1.5, 2.0)
    assert isinstance(res.value, complex)
    assert isinstance(res.abs_err_est, float)
    assert isinstance(res.nodes_used, int)
