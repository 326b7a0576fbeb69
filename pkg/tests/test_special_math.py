import math

import mpmath
import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from conftest import midpoint
from zeta_gaps.errors import DomainError
from zeta_gaps.special_math import (factorial_ratio_root, integrate_oscillatory,
                                    sin_half_sq_integral, sinc_kernel)

# Frozen from a 1e7-panel midpoint sum.
SI_PI_OVER_PI = 0.5894898722360841
J_TWO_PI = 1.2188266965286163
EULER_GAMMA = 0.5772156649015329


def oscillatory_oracle(a, s, n=2_000_000):
    return midpoint(lambda v: np.sin(np.pi * a * v) / (np.pi * v) * (1 - v) ** s, 0.0, 1.0, n)


def test_tiny_frequency_vanishes():
    for s in (0.0, 1.0, 50.0):
        assert abs(integrate_oscillatory(1e-12, s).value) < 1e-11


def test_unit_frequency_matches_si():
    q = integrate_oscillatory(1.0, 0.0)
    assert q.value == pytest.approx(SI_PI_OVER_PI, abs=1e-12)
    assert abs(q.value - SI_PI_OVER_PI) <= q.abs_error + 1e-15


def test_table1_r2_example_as_written():
    r, theta, ell = 2, 0.6186133, 1.41963
    q = integrate_oscillatory(2 + theta * math.sqrt(2), ell ** 2)
    assert 2 * ell / math.sqrt(r) * q.value > theta


def test_table1_r2_inf_frequency():
    r, theta, ell = 2, 0.6186133, 1.41963
    q = integrate_oscillatory(2 - theta * math.sqrt(2), ell ** 2)
    assert 2 * ell / math.sqrt(r) * q.value - theta > 0


@pytest.mark.parametrize("a,s", [(1.0, 0.0), (3.7, 2.0), (12.5, 40.0), (57.3, 0.5)])
def test_error_estimate_is_honest(a, s):
    exact = float(mpmath.quad(lambda v: mpmath.sin(mpmath.pi * a * v) / (mpmath.pi * v)
                              * (1 - v) ** s, mpmath.linspace(0, 1, int(a) + 2)))
    q = integrate_oscillatory(a, s)
    assert q.abs_error >= 0 and q.n_evals >= 1
    assert abs(q.value - exact) <= q.abs_error + 1e-14


@pytest.mark.parametrize("a", [0.0, -1.0, math.inf, math.nan])
def test_bad_frequency(a):
    with pytest.raises(DomainError):
        integrate_oscillatory(a, 1.0)


def test_bad_exponent():
    with pytest.raises(DomainError):
        integrate_oscillatory(1.0, -0.5)


def test_panel_budget_exhaustion_reports_error():
    q = integrate_oscillatory(30.0, 400.0, tol=1e-15, max_panels=31)
    assert q.abs_error > 0
    assert math.isfinite(q.value)


def test_sinc_kernel_removable_point():
    assert sinc_kernel(3.0, 0.0) == 3.0
    v = np.array([1e-9, 1e-6, 1e-3])
    np.testing.assert_allclose(sinc_kernel(3.0, v), np.sin(3 * np.pi * v) / (np.pi * v), rtol=1e-14)


def si_series(x):
    return float(mpmath.nsum(lambda k: (-1) ** k * mpmath.mpf(x) ** (2 * k + 1)
                             / ((2 * k + 1) * mpmath.factorial(2 * k + 1)), [0, mpmath.inf]))


@pytest.mark.parametrize("a", [0.3, 1.0, 7.5, 42.0, 99.9])
def test_zero_exponent_is_sine_integral(a):
    with mpmath.workdps(40):
        expected = si_series(math.pi * a) / math.pi
    assert integrate_oscillatory(a, 0.0).value == pytest.approx(expected, abs=1e-8)


def test_random_inputs_match_midpoint_oracle():
    rng = np.random.default_rng(20240611)
    for a, s in zip(rng.uniform(0.1, 100.0, 50), rng.uniform(0.0, 400.0, 50)):
        assert integrate_oscillatory(a, s).value == pytest.approx(
            oscillatory_oracle(a, s), abs=1e-8), (a, s)


# --- sin^2(u/2)/u

def test_sin_half_sq_zero():
    assert sin_half_sq_integral(0.0) == 0.0


def test_sin_half_sq_two_pi():
    assert sin_half_sq_integral(2 * math.pi) == pytest.approx(J_TWO_PI, abs=1e-10)
    ci = float(mpmath.ci(2 * math.pi))
    assert sin_half_sq_integral(2 * math.pi) == pytest.approx(
        0.5 * (EULER_GAMMA + math.log(2 * math.pi) - ci), abs=1e-12)


def test_sin_half_sq_small_argument_is_quadratic():
    # integrand ~ u/4 near 0
    assert sin_half_sq_integral(1e-4) == pytest.approx(1e-8 / 8, rel=1e-6)


@pytest.mark.parametrize("x", [0.999999, 1.0, 1.000001, 9999.0, 10001.0, 1e6])
def test_sin_half_sq_branches_agree_with_ci(x):
    ci = float(mpmath.ci(x))
    assert sin_half_sq_integral(x) == pytest.approx(
        0.5 * (EULER_GAMMA + math.log(x) - ci), abs=1e-11)


@pytest.mark.parametrize("x", [-1.0, math.inf, math.nan])
def test_sin_half_sq_domain(x):
    with pytest.raises(DomainError):
        sin_half_sq_integral(x)


def test_sin_half_sq_random_vs_oracle():
    rng = np.random.default_rng(7)
    for x in rng.uniform(0.0, 8 * math.pi, 50):
        oracle = midpoint(lambda u: np.sin(u / 2) ** 2 / u, 0.0, x, 1_000_000)
        assert sin_half_sq_integral(x) == pytest.approx(oracle, abs=1e-8)


def test_sin_half_sq_monotone_and_bounded():
    xs = np.linspace(0.0, 60.0, 3001)
    vals = np.array([sin_half_sq_integral(x) for x in xs])
    assert np.all(np.diff(vals) >= 0)
    big = xs >= 1
    assert np.all(vals[big] <= 0.5 * (EULER_GAMMA + np.log(xs[big]) + 1))


@settings(max_examples=200, deadline=None)
@given(st.floats(0.0, 100.0), st.floats(0.0, 100.0))
def test_sin_half_sq_nondecreasing_property(x, y):
    lo, hi = min(x, y), max(x, y)
    assert sin_half_sq_integral(lo) <= sin_half_sq_integral(hi) + 1e-15


# --- factorial ratio

def test_factorial_ratio_small():
    assert factorial_ratio_root(1) == pytest.approx(math.sqrt(2), rel=1e-15)
    assert factorial_ratio_root(2) == pytest.approx(12 ** 0.25, rel=1e-15)


def test_factorial_ratio_beyond_double_factorial_range():
    # log sum oracle: sum_{k=171}^{340} log k / 340
    assert factorial_ratio_root(170) == pytest.approx(math.exp(2.7620650122990043), rel=1e-12)


@pytest.mark.parametrize("r", [3, 57, 999, 10_000])
def test_factorial_ratio_vs_log_sum(r):
    oracle = math.exp(math.fsum(math.log(k) for k in range(r + 1, 2 * r + 1)) / (2 * r))
    assert factorial_ratio_root(r) == pytest.approx(oracle, rel=1e-12)


@pytest.mark.parametrize("r", [0, -3, 2.5])
def test_factorial_ratio_domain(r):
    with pytest.raises(DomainError):
        factorial_ratio_root(r)


def test_normalized_factorial_ratio_alone_decreases():
    # Stirling: r^(-1/2) ((2r)!/r!)^(1/(2r)) ~ 2 e^(-1/2) exp(log 2 / (4r)), decreasing.
    # Monotone increase needs the 2^(-1/(2r+1)) factor too (see test_tsang_bounds).
    vals = [factorial_ratio_root(r) / math.sqrt(r) for r in range(1, 10_001)]
    assert all(b < a for a, b in zip(vals, vals[1:]))
    assert vals[-1] == pytest.approx(2 * math.exp(-0.5) * math.exp(math.log(2) / 4e4), rel=1e-8)
