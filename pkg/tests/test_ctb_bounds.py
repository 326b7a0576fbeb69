import math

import numpy as np
import pytest

from zeta_gaps import ctb_bounds as cb
from zeta_gaps.constants import A0, B0
from zeta_gaps.errors import DomainError
from zeta_gaps.model import Direction

SUP, INF = Direction.SUP, Direction.INF


def test_inf_zero_frequency():
    assert cb.ctb_rhs(1, 1.0, 1.5, INF) == 0.0


def test_inf_negative_frequency_rejected():
    with pytest.raises(DomainError):
        cb.ctb_rhs(4, 2.5, 1.5, INF)


@pytest.mark.parametrize("r,theta,ell,d", [(2, 0.6186133, 1.41963, INF), (2, 1.208, 2.8, SUP)])
def test_printed_pairs_certify(r, theta, ell, d):
    assert cb.ctb_rhs(r, theta, ell, d) > theta


@pytest.mark.parametrize("r,ell", [(1, 2.0), (7, 3.3), (20, 7.0)])
def test_symmetry_at_zero_theta(r, ell):
    assert cb.ctb_rhs(r, 0.0, ell, SUP) == cb.ctb_rhs(r, 0.0, ell, INF)


def test_direction_strings_accepted():
    assert cb.ctb_rhs(3, 0.5, 2.0, "sup") == cb.ctb_rhs(3, 0.5, 2.0, SUP)
    with pytest.raises(DomainError):
        cb.ctb_rhs(3, 0.5, 2.0, "up")


def test_solve_theta_crossing():
    r, ell = 6, 3.0
    th = cb.solve_theta(r, ell, INF)
    assert th < cb.ctb_rhs(r, th, ell, INF)
    assert th + 1e-4 >= cb.ctb_rhs(r, th + 1e-4, ell, INF)


def test_solve_theta_r2_inf():
    assert cb.solve_theta(2, 1.41963, INF) >= 0.6186133 - 1e-4


def test_solve_theta_r20_sup():
    assert cb.solve_theta(20, 7.39, SUP) >= 0.9995 - 1e-3


def test_solve_theta_requires_ell_at_least_one():
    with pytest.raises(DomainError):
        cb.solve_theta(3, 0.5, SUP)


def test_optimize_r1_sup():
    res = cb.optimize_ell(1, SUP)
    assert res.theta >= 1.337 - 1e-2
    assert res.ell == pytest.approx(2.16, abs=0.05)
    assert res.margin > 0


def test_optimize_r10_inf():
    res = cb.optimize_ell(10, INF)
    assert res.theta >= 0.778 - 1e-2
    assert res.ell == pytest.approx(4.06, abs=0.05)
    assert res.margin > 0
    assert res.theta < math.sqrt(10)


@pytest.mark.parametrize("r,d", [(3, SUP), (5, INF)])
def test_optimum_is_local(r, d):
    res = cb.optimize_ell(r, d)
    for shift in (-0.2, 0.2):
        assert cb.solve_theta(r, res.ell + shift, d) <= res.theta + 1e-3


# --- closed form

def test_closed_form_sup_brace_at_8():
    assert cb.closed_form_brace(8, A0(), SUP) >= 0.009


def test_closed_form_inf_rhs_at_8():
    assert cb.closed_form_rhs(8, 0.61861, INF) >= 0.62


def test_closed_form_limit():
    for d in (SUP, INF):
        assert cb.closed_form_rhs(10 ** 8, 0.5, d) == pytest.approx(A0(), abs=1e-3)


def test_closed_form_small_r_rejected():
    with pytest.raises(DomainError):
        cb.closed_form_rhs(7, 0.5, SUP)


def test_closed_form_forms_are_mirror_images():
    # the inf form at theta equals the sup form at -theta
    for r in (8, 30, 500):
        for th in (0.2, 0.61861, 1.0):
            assert cb.closed_form_rhs(r, th, INF) == pytest.approx(
                cb.closed_form_rhs(r, -th, SUP), abs=1e-14)


def test_closed_form_below_integral():
    rng = np.random.default_rng(3)
    for r, th in zip(rng.integers(8, 101, 40), rng.uniform(-1, 1, 40)):
        for d in (SUP, INF):
            ell = cb.closed_form_ell(int(r), th, d)
            assert cb.closed_form_rhs(int(r), th, d) <= cb.ctb_rhs(int(r), th, ell, d) + 1e-8


def test_uniform_sup():
    ok, worst = cb.uniform_check(SUP, A0(), 10 ** 4)
    assert ok and worst > 0


def test_uniform_inf():
    chk = cb.uniform_check(INF, 0.61861, 10 ** 4)
    assert chk.ok and chk.worst_margin > 0 and chk.brace_monotone


def test_uniform_fails_for_large_theta():
    ok, worst = cb.uniform_check(SUP, 1.5, 10)
    assert not ok and worst < 0


def test_brace_monotonicity():
    sup = [cb.closed_form_brace(r, A0(), SUP) for r in range(8, 10_001)]
    inf = [cb.closed_form_brace(r, 0.61861, INF) for r in range(8, 10_001)]
    assert all(b > a for a, b in zip(sup, sup[1:]))
    assert all(b < a for a, b in zip(inf, inf[1:]))


def test_uniform_r_max_range():
    with pytest.raises(DomainError):
        cb.uniform_check(SUP, A0(), 7)


def test_closed_form_ell_at_least_two_for_r8():
    for th in (-1.0, 1.0):
        for d in (SUP, INF):
            assert cb.closed_form_ell(8, th, d) >= 2


def test_table1_rows_subset():
    rows = cb.table1([1, 5, 12], workers=1)
    assert [row.r for row in rows] == [1, 5, 12]
    by_r = {row.r: row for row in rows}
    assert by_r[5].sup.theta == pytest.approx(1.094, abs=1e-2)
    assert by_r[5].sup.ell == pytest.approx(4.03, abs=0.05)
    assert by_r[5].inf.theta == pytest.approx(0.727, abs=1e-2)
    assert by_r[5].inf.ell == pytest.approx(2.66, abs=0.05)
    assert by_r[12].sup.theta == pytest.approx(1.027, abs=1e-2)
    assert by_r[12].inf.theta == pytest.approx(0.789, abs=1e-2)
    assert by_r[1].inf.theta == pytest.approx(0.482, abs=1e-2)
    for row in rows:
        assert row.sup.margin > 0 and row.inf.margin > 0
        assert row.printed_margin_sup > 0 and row.printed_margin_inf > 0


def test_table1_pool_matches_serial():
    serial = cb.table1([2, 3], workers=1)
    pooled = cb.table1([2, 3], workers=2)
    assert serial == pooled
