"""Gap constants from the moment method for short-interval variations of
``S(t)``, in the ``T -> infinity`` limit with moment order ``k = r``:

    theta < r^(-1/2) 2^(-1/(2r+1)) / pi * ((2r)!/r!)^(1/(2r)) * J(X)^(1/2),
    X = 4 pi r/(2r + 1) * (1 +/- theta/sqrt r),

where ``J(x) = int_0^x sin^2(u/2)/u du``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import DomainError
from .model import BoundResult, Direction, Method, as_direction, check_r
from .solvers import last_crossing
from .special_math import factorial_ratio_root, sin_half_sq_integral

THETA_TOL = 1e-7
SUP_CEILING = 2.0
INF_CEILING_FRACTION = 0.999

# Published reference values: r -> (Theta, vartheta).
TABLE2_PRINTED = {
    1: (0.394255, 0.308149), 2: (0.402631, 0.363309),
    3: (0.408227, 0.385637), 4: (0.411824, 0.397074),
    5: (0.414269, 0.403816), 6: (0.416023, 0.408182),
    7: (0.417337, 0.411207), 8: (0.418355, 0.4134103),
    9: (0.419167, 0.415078), 10: (0.419828, 0.416379),
    11: (0.420377, 0.417421), 12: (0.4208407, 0.418272),
    13: (0.421236, 0.418979), 14: (0.421578, 0.419575),
    15: (0.421876, 0.420084), 16: (0.422139, 0.420523),
    17: (0.422372, 0.420906), 18: (0.4225802, 0.421243),
    19: (0.422767, 0.4215409), 20: (0.422936, 0.421806),
}

UNIFORM_R_MIN = 5
UNIFORM_SUP_THETA = 0.414269
UNIFORM_INF_THETA = 0.403816


def prefactor(r: int) -> float:
    """``r^(-1/2) 2^(-1/(2r+1)) pi^(-1) ((2r)!/r!)^(1/(2r))``."""
    r = check_r(r)
    return factorial_ratio_root(r) / (math.sqrt(r) * 2.0 ** (1.0 / (2 * r + 1)) * math.pi)


def upper_limit(r: int, theta: float, direction) -> float:
    """The integration limit ``X`` for ``(r, theta)``."""
    sign = as_direction(direction).sign
    return 4.0 * math.pi * r / (2 * r + 1) * (1.0 + sign * theta / math.sqrt(r))


def tsang_rhs(r: int, theta: float, direction) -> float:
    r = check_r(r)
    direction = as_direction(direction)
    if direction is Direction.INF and theta >= math.sqrt(r):
        raise DomainError(f"inf side needs theta < sqrt(r); got theta={theta!r}, r={r}")
    x = upper_limit(r, theta, direction)
    if x < 0:
        raise DomainError(f"integration limit {x!r} is negative")
    return prefactor(r) * math.sqrt(sin_half_sq_integral(x))


def solve_theta_tsang(r: int, direction, tol: float = THETA_TOL) -> BoundResult:
    """Largest ``theta`` with ``theta < tsang_rhs(r, theta)``, bisected to ``tol``."""
    r = check_r(r)
    direction = as_direction(direction)
    hi = SUP_CEILING if direction is Direction.SUP else min(
        SUP_CEILING, INF_CEILING_FRACTION * math.sqrt(r))
    theta, margin = last_crossing(
        lambda th: tsang_rhs(r, th, direction) - th, 0.0, hi, tol=tol)
    if margin <= 0:
        theta, margin = 0.0, 0.0
    return BoundResult(r, direction, theta, None, margin, Method.TSANG)


@dataclass(frozen=True)
class TsangRow:
    r: int
    theta_sup: float
    theta_inf: float
    margin_sup: float
    margin_inf: float


def table2(r_values=range(1, 21)):
    rows = []
    for r in r_values:
        sup = solve_theta_tsang(r, Direction.SUP)
        inf = solve_theta_tsang(r, Direction.INF)
        rows.append(TsangRow(r, sup.theta, inf.theta, sup.margin, inf.margin))
    return rows


def threshold_lower_bound(r: int) -> float:
    """``prefactor(r) * J(2 pi)^(1/2)``: a lower bound for the sup-side
    right-hand side whenever ``X >= 2 pi``."""
    return prefactor(r) * math.sqrt(sin_half_sq_integral(2.0 * math.pi))


@dataclass(frozen=True)
class TsangUniformCheck:
    sup_ok: bool
    inf_ok: bool
    sup_worst_margin: float
    inf_worst_margin: float
    min_x_minus_2pi: float
    threshold_from_r: int | None

    def __iter__(self):
        return iter((self.sup_ok, self.inf_ok))


def uniform_tsang_check(r_max: int, theta_sup: float = UNIFORM_SUP_THETA,
                        theta_inf: float = UNIFORM_INF_THETA) -> TsangUniformCheck:
    """Sweep ``5 <= r <= r_max`` for the uniform constants.

    Inf: the right-hand side at fixed ``theta_inf`` must be nondecreasing in
    ``r`` and exceed ``theta_inf`` at every ``r``.
    Sup: ``X >= 2 pi`` must hold at every ``r`` and the right-hand side must
    exceed ``theta_sup``. ``threshold_from_r`` is the first ``r`` from which
    :func:`threshold_lower_bound` alone clears ``theta_sup`` for the rest of
    the sweep (``None`` if it never does).

    Unpacks as ``(sup_ok, inf_ok)``.
    """
    r_max = int(r_max)
    if r_max < UNIFORM_R_MIN:
        raise DomainError(f"r_max must be >= {UNIFORM_R_MIN}, got {r_max}")
    rs = range(UNIFORM_R_MIN, r_max + 1)
    inf_rhs = [tsang_rhs(r, theta_inf, Direction.INF) for r in rs]
    inf_monotone = all(b >= a for a, b in zip(inf_rhs, inf_rhs[1:]))
    inf_worst = min(v - theta_inf for v in inf_rhs)

    xs = [upper_limit(r, theta_sup, Direction.SUP) - 2.0 * math.pi for r in rs]
    sup_worst = min(tsang_rhs(r, theta_sup, Direction.SUP) - theta_sup for r in rs)
    clears = [threshold_lower_bound(r) > theta_sup for r in rs]
    threshold_from = None
    for i in range(len(clears) - 1, -1, -1):
        if not clears[i]:
            break
        threshold_from = UNIFORM_R_MIN + i
    return TsangUniformCheck(
        sup_ok=min(xs) >= 0 and sup_worst > 0,
        inf_ok=inf_monotone and inf_worst > 0,
        sup_worst_margin=sup_worst,
        inf_worst_margin=inf_worst,
        min_x_minus_2pi=min(xs),
        threshold_from_r=threshold_from,
    )
