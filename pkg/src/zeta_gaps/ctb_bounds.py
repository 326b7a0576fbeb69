"""Conrey--Turnage-Butterbaugh sufficient conditions for the r-gap bounds
``1 +/- theta/sqrt(r)``, the optimiser over the smoothing length ``ell``,
and the closed-form lower bound valid for ``r >= 8``.

A pair ``(theta, ell)`` certifies a bound when

    theta < (2 ell / sqrt r) int_0^1 sin(pi a v)/(pi v) (1 - v)^(ell^2) dv,

with ``a = r + theta sqrt r`` for the limsup side and ``a = r - theta sqrt r``
for the liminf side.
"""

from __future__ import annotations

import math
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass

import numpy as np

from .constants import A0, B0
from .errors import DomainError
from .model import BoundResult, Direction, Method, as_direction, check_r
from .solvers import golden_section_max, last_crossing
from .special_math import DEFAULT_TOL, integrate_oscillatory

THETA_CEILING = 2.0
INF_CEILING_FRACTION = 0.999
THETA_TOL = 1e-6
ELL_RANGE = (1.0, 12.0)
ELL_GRID_STEP = 0.25
ELL_TOL = 1e-3
CLOSED_FORM_MIN_R = 8

# Published reference pairs: r -> ((Theta, ell), (vartheta, ell)).
TABLE1_PRINTED = {
    1: ((1.337, 2.16), (0.482, 1.02)),
    2: ((1.208, 2.8), (0.6186133, 1.41963)),
    3: ((1.151, 3.28), (0.675, 1.88)),
    4: ((1.117, 3.68), (0.706, 2.29)),
    5: ((1.094, 4.03), (0.727, 2.66)),
    6: ((1.078, 4.36), (0.742, 2.98)),
    7: ((1.065, 4.65), (0.754, 3.28)),
    8: ((1.054, 4.93), (0.764, 3.56)),
    9: ((1.046, 5.18), (0.772, 3.81)),
    10: ((1.038, 5.43), (0.778, 4.06)),
    11: ((1.032, 5.66), (0.784, 4.29)),
    12: ((1.027, 5.88), (0.789, 4.51)),
    13: ((1.022, 6.09), (0.794, 4.73)),
    14: ((1.018, 6.3), (0.798, 4.93)),
    15: ((1.014, 6.49), (0.802, 5.13)),
    16: ((1.0107, 6.69), (0.805, 5.32)),
    17: ((1.007, 6.87), (0.808, 5.51)),
    18: ((1.004, 7.05), (0.811, 5.69)),
    19: ((1.002, 7.22), (0.813, 5.86)),
    20: ((0.9995, 7.39), (0.815, 6.03)),
}

# Uniform constants for r >= 8: Theta = A0 and vartheta = 0.61861.
UNIFORM_INF_THETA = 0.61861


def frequency(r: int, theta: float, direction) -> float:
    """``r + theta sqrt r`` (sup) or ``r - theta sqrt r`` (inf)."""
    return r + as_direction(direction).sign * theta * math.sqrt(r)


def ctb_rhs(r: int, theta: float, ell: float, direction, tol: float = DEFAULT_TOL) -> float:
    """Right-hand side of the sufficient condition at ``(theta, ell)``."""
    r = check_r(r)
    direction = as_direction(direction)
    if not ell > 0:
        raise DomainError(f"ell must be positive, got {ell!r}")
    ell = float(ell)
    a = frequency(r, theta, direction)
    if direction is Direction.INF and theta * math.sqrt(r) >= r:
        if theta * math.sqrt(r) == r:
            return 0.0
        raise DomainError(
            f"inf frequency r - theta*sqrt(r) = {a!r} is negative (theta={theta!r}, r={r})")
    if a <= 0:
        raise DomainError(f"frequency {a!r} must be positive")
    quad = integrate_oscillatory(a, ell * ell, tol=tol)
    return 2.0 * ell / math.sqrt(r) * quad.value


def theta_ceiling(r: int, direction) -> float:
    if as_direction(direction) is Direction.SUP:
        return THETA_CEILING
    return min(THETA_CEILING, INF_CEILING_FRACTION * math.sqrt(r))


def _solve(r, ell, direction, tol, theta_tol=THETA_TOL):
    hi = theta_ceiling(r, direction)
    theta, margin = last_crossing(
        lambda th: ctb_rhs(r, th, ell, direction, tol) - th, 0.0, hi, tol=theta_tol)
    if margin <= 0:
        return 0.0, 0.0
    return theta, margin


def solve_theta(r: int, ell: float, direction, tol: float = DEFAULT_TOL) -> float:
    """Largest ``theta`` in ``[0, ceiling]`` with ``theta < ctb_rhs(theta)``.

    Located by bisection to ``1e-6``. Returns 0 when no positive theta works.
    """
    r = check_r(r)
    if not ell >= 1:
        raise DomainError(f"ell must be >= 1, got {ell!r}")
    return _solve(r, ell, as_direction(direction), tol)[0]


def solve_theta_result(r: int, ell: float, direction, tol: float = DEFAULT_TOL) -> BoundResult:
    """:func:`solve_theta` packaged with its certificate margin."""
    r = check_r(r)
    direction = as_direction(direction)
    if not ell >= 1:
        raise DomainError(f"ell must be >= 1, got {ell!r}")
    theta, margin = _solve(r, ell, direction, tol)
    return BoundResult(r, direction, theta, ell, margin, Method.CTB_INTEGRAL)


def optimize_ell(r: int, direction, tol: float = DEFAULT_TOL) -> BoundResult:
    """Maximise the solved theta over ``ell`` in ``[1, 12]``.

    A 0.25-step grid locates the best cell, then golden-section search
    refines ``ell`` inside the neighbouring cells.
    """
    r = check_r(r)
    direction = as_direction(direction)
    lo, hi = ELL_RANGE
    grid = np.arange(lo, hi + 0.5 * ELL_GRID_STEP, ELL_GRID_STEP)
    solved = [_solve(r, ell, direction, tol) for ell in grid]
    best = int(np.argmax([t for t, _ in solved]))
    a = grid[max(best - 1, 0)]
    b = grid[min(best + 1, len(grid) - 1)]

    cache = {}

    def theta_at(ell):
        cache[ell] = _solve(r, ell, direction, tol)
        return cache[ell][0]

    ell_star, theta_star, _ = golden_section_max(theta_at, a, b, tol=ELL_TOL)
    theta_grid, margin_grid = solved[best]
    if theta_grid > theta_star:
        ell_star, theta_star = float(grid[best]), theta_grid
        margin = margin_grid
    else:
        margin = cache[ell_star][1]
    return BoundResult(r, direction, theta_star, float(ell_star), margin,
                       Method.CTB_INTEGRAL)


def _closed_form_parts(r, theta, direction):
    sign = as_direction(direction).sign
    sr = math.sqrt(r)
    shifted = r + sign * theta * sr
    if shifted <= 0:
        raise DomainError(f"r {'+' if sign > 0 else '-'} theta*sqrt(r) must be positive")
    q = math.sqrt(shifted)
    a0, b0 = A0(), B0()
    ell = b0 * q
    if r < CLOSED_FORM_MIN_R:
        raise DomainError(f"closed-form bound requires r >= {CLOSED_FORM_MIN_R}, got r={r}")
    if ell < 2:
        raise DomainError(f"closed-form bound requires ell = B0*sqrt(r +/- theta sqrt r) >= 2, got {ell!r}")
    tail = 4.0 * (math.exp(-b0 * q) / math.pi + 1.0 / (b0 ** 3 * q))
    return sr, a0, tail


def closed_form_brace(r: int, theta: float, direction) -> float:
    """The braced correction term of the closed-form bound.

    Sup: ``theta/(sqrt(1 + theta/sqrt r) + 1) * A0 - tail``, so that
    ``rhs = A0 + brace/sqrt(r)``.
    Inf: ``(1 - sqrt(1 - theta/sqrt r)) * A0 + tail/sqrt(r)``, so that
    ``rhs = A0 - brace``.
    """
    r = check_r(r)
    direction = as_direction(direction)
    sr, a0, tail = _closed_form_parts(r, theta, direction)
    if direction is Direction.SUP:
        return theta / (math.sqrt(1.0 + theta / sr) + 1.0) * a0 - tail
    return (1.0 - math.sqrt(1.0 - theta / sr)) * a0 + tail / sr


def closed_form_rhs(r: int, theta: float, direction) -> float:
    """Closed-form lower bound for :func:`ctb_rhs` at ``ell = B0 sqrt(r +/- theta sqrt r)``."""
    r = check_r(r)
    direction = as_direction(direction)
    brace = closed_form_brace(r, theta, direction)
    if direction is Direction.SUP:
        return A0() + brace / math.sqrt(r)
    return A0() - brace


def closed_form_ell(r: int, theta: float, direction) -> float:
    """The smoothing length at which the closed form is derived."""
    return B0() * math.sqrt(frequency(r, theta, direction))


@dataclass(frozen=True)
class UniformCheck:
    ok: bool
    worst_margin: float
    worst_r: int
    brace_monotone: bool

    def __iter__(self):
        return iter((self.ok, self.worst_margin))


def uniform_check(direction, theta_const: float, r_max: int) -> UniformCheck:
    """Check ``theta_const < closed_form_rhs(r, theta_const)`` for ``8 <= r <= r_max``.

    Unpacks as ``(ok, worst_margin)``; ``brace_monotone`` additionally
    reports whether the brace is increasing (sup) or decreasing (inf) in
    ``r`` over the swept range.
    """
    direction = as_direction(direction)
    r_max = int(r_max)
    if not CLOSED_FORM_MIN_R <= r_max <= 10 ** 6:
        raise DomainError(f"r_max must lie in [8, 1e6], got {r_max}")
    rs = range(CLOSED_FORM_MIN_R, r_max + 1)
    braces = np.array([closed_form_brace(r, theta_const, direction) for r in rs])
    rt = np.sqrt(np.fromiter(rs, dtype=float))
    if direction is Direction.SUP:
        rhs = A0() + braces / rt
        monotone = bool(np.all(np.diff(braces) > 0))
    else:
        rhs = A0() - braces
        monotone = bool(np.all(np.diff(braces) < 0))
    margins = rhs - theta_const
    worst = int(np.argmin(margins))
    return UniformCheck(bool(np.all(margins > 0)), float(margins[worst]),
                        CLOSED_FORM_MIN_R + worst, monotone)


@dataclass(frozen=True)
class Table1Row:
    r: int
    sup: BoundResult
    inf: BoundResult
    printed_sup: tuple
    printed_inf: tuple
    printed_margin_sup: float
    printed_margin_inf: float


def printed_margins(r: int, tol: float = DEFAULT_TOL):
    """Margins ``rhs - theta`` at the published reference pairs for row ``r``."""
    (ts, ls), (ti, li) = TABLE1_PRINTED[r]
    return (ctb_rhs(r, ts, ls, Direction.SUP, tol) - ts,
            ctb_rhs(r, ti, li, Direction.INF, tol) - ti)


def table1_row(r: int, tol: float = DEFAULT_TOL) -> Table1Row:
    sup = optimize_ell(r, Direction.SUP, tol)
    inf = optimize_ell(r, Direction.INF, tol)
    ms, mi = printed_margins(r, tol) if r in TABLE1_PRINTED else (math.nan, math.nan)
    printed = TABLE1_PRINTED.get(r, ((math.nan, math.nan), (math.nan, math.nan)))
    return Table1Row(r, sup, inf, printed[0], printed[1], ms, mi)


def table1(r_values=range(1, 21), tol: float = DEFAULT_TOL, workers: int | None = None):
    """Optimised ``(Theta, ell)`` and ``(vartheta, ell)`` for each ``r``.

    Rows are computed in a process pool when ``workers`` is not 1; output
    order always follows ``r_values``.
    """
    r_values = list(r_values)
    if workers == 1 or len(r_values) < 2:
        return [table1_row(r, tol) for r in r_values]
    with ProcessPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(table1_row, r_values, [tol] * len(r_values)))
