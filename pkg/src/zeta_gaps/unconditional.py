"""Gap constants from an oscillation hypothesis on ``S(t)``.

Suppose ``sup_{t in [T, 2T]} +/-(S(t + h) - S(t)) >= c (h log T)^beta``. Take
the window ``h = (2 pi r / log T)(1 +/- theta r^(beta - 1))``. By the
Riemann--von Mangoldt formula ``N(t + h) - N(t)`` is
``(h/2pi) log t + S(t + h) - S(t) + o(1)``, so some window of that length
holds fewer than ``r`` ordinates (limsup side) or more than ``r`` (liminf
side) once

    theta < c (2 pi)^beta (1 +/- theta r^(beta - 1))^beta.

This yields gaps ``1 +/- theta / r^(1 - beta)``. The lower-order terms vanish
as ``T -> infinity`` and are dropped.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import DomainError
from .model import Direction, as_direction, check_r

TWO_PI = 2.0 * math.pi
THETA_TOL = 1e-12


@dataclass(frozen=True)
class OscillationHypothesis:
    """``c`` is the oscillation constant and ``beta`` the exponent: 1/3
    unconditionally, 1/2 on the Riemann Hypothesis."""

    c: float
    beta: float = 1.0 / 3.0

    def __post_init__(self):
        if not (math.isfinite(self.c) and self.c >= 0):
            raise DomainError(f"c must be finite and nonnegative, got {self.c!r}")
        if not 0 < self.beta < 1:
            raise DomainError(f"beta must lie in (0, 1), got {self.beta!r}")

    @property
    def gap_exponent(self) -> float:
        """``alpha = 1 - beta`` in the gap shape ``1 +/- theta / r^alpha``."""
        return 1.0 - self.beta


def rvm_main_term(T: float) -> float:
    """``(T/2pi) log(T/(2 pi e)) + 7/8``."""
    if not T > TWO_PI:
        raise DomainError(f"T must exceed 2*pi, got {T!r}")
    return T / TWO_PI * math.log(T / (TWO_PI * math.e)) + 0.875


def count_increment_main(t: float, h: float) -> float:
    """Main term ``(h/2pi) log t`` of ``N(t + h) - N(t)``."""
    if not t > math.e:
        raise DomainError(f"t must exceed e, got {t!r}")
    if not h > 0:
        raise DomainError(f"h must be positive, got {h!r}")
    return h / TWO_PI * math.log(t)


def window_length(r: int, theta: float, beta: float, T: float, direction) -> float:
    """``h = (2 pi r / log T)(1 +/- theta r^(beta - 1))``."""
    r = check_r(r)
    sign = as_direction(direction).sign
    return TWO_PI * r / math.log(T) * (1.0 + sign * theta * r ** (beta - 1.0))


def gap_criterion_rhs(hyp: OscillationHypothesis, r: int, theta: float, direction) -> float:
    """``c (2 pi)^beta (1 +/- theta r^(beta - 1))^beta``; 0 once the base is negative."""
    r = check_r(r)
    sign = as_direction(direction).sign
    base = 1.0 + sign * theta * r ** (hyp.beta - 1.0)
    if base <= 0:
        return 0.0
    return hyp.c * TWO_PI ** hyp.beta * base ** hyp.beta


def solve_gap_theta(hyp: OscillationHypothesis, r: int, direction,
                    tol: float = THETA_TOL) -> float:
    """Largest ``theta`` with ``theta < gap_criterion_rhs(theta)``.

    On the sup side ``theta - rhs`` is convex with a single root; the
    bracket is doubled until it changes sign. On the inf side the root
    lies below ``r^(1 - beta)``, where the window shrinks to nothing.
    """
    r = check_r(r)
    direction = as_direction(direction)
    if hyp.c == 0:
        return 0.0

    def excess(theta):
        return theta - gap_criterion_rhs(hyp, r, theta, direction)

    lo = 0.0
    if direction is Direction.SUP:
        hi = max(1.0, hyp.c * TWO_PI ** hyp.beta)
        while excess(hi) < 0:
            lo, hi = hi, 2.0 * hi
    else:
        hi = r ** (1.0 - hyp.beta)
    while hi - lo > tol * max(1.0, hi):
        mid = 0.5 * (lo + hi)
        if excess(mid) < 0:
            lo = mid
        else:
            hi = mid
    return lo
