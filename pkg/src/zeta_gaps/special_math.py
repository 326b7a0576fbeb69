"""Numerical primitives behind every bound.

* ``integrate_oscillatory(a, s)``: ``int_0^1 sin(pi a v)/(pi v) (1 - v)^s dv``
* ``sin_half_sq_integral(x)``: ``int_0^x sin^2(u/2)/u du``
* ``factorial_ratio_root(r)``: ``((2r)!/r!)^(1/(2r))`` without overflow

The oscillatory integral is split at the sign changes ``k/a`` of the sine
and each half-period panel gets a 15-point Gauss-Legendre rule. A panel is
accepted when the rule agrees with the same rule applied to its two halves;
otherwise it is bisected. Everything runs in double precision.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import DomainError

GL_ORDER = 15
_GL_X, _GL_W = np.polynomial.legendre.leggauss(GL_ORDER)
_GL_X.setflags(write=False)
_GL_W.setflags(write=False)

DEFAULT_TOL = 1e-9
MAX_A = 1e7
_CHUNK = 200_000
_EPS = float(np.finfo(float).eps)
_ASYMPTOTIC_X = 1e4
EULER_GAMMA = 0.57721566490153286061


@dataclass(frozen=True)
class QuadratureEstimate:
    """Integral value with an absolute-error estimate."""

    value: float
    abs_error: float
    n_evals: int

    def __float__(self):
        return self.value


def sinc_kernel(a, v):
    """``sin(pi a v)/(pi v)``, continuous at ``v = 0`` where it equals ``a``.

    Below ``v < 1e-4/a`` the Taylor polynomial is used instead of the ratio.
    """
    v = np.asarray(v, dtype=float)
    x = np.pi * a * v
    small = np.abs(v) < 1e-4 / a
    safe_v = np.where(small, 1.0, v)
    direct = np.sin(x) / (np.pi * safe_v)
    x2 = x * x
    series = a * (1.0 - x2 / 6.0 * (1.0 - x2 / 20.0))
    return np.where(small, series, direct)


def _integrand(a, s, v):
    w = 1.0 - v
    if s == 0:
        return sinc_kernel(a, v)
    return sinc_kernel(a, v) * w ** s


def _gl_panels(a, s, lo, hi):
    """Gauss-Legendre estimate on each panel ``[lo_i, hi_i]``."""
    half = 0.5 * (hi - lo)
    mid = 0.5 * (hi + lo)
    nodes = mid[:, None] + half[:, None] * _GL_X[None, :]
    vals = _integrand(a, s, nodes)
    return half * (vals @ _GL_W)


def integrate_oscillatory(a: float, s: float, tol: float = DEFAULT_TOL,
                          max_panels: int | None = None) -> QuadratureEstimate:
    """Integrate ``sin(pi a v)/(pi v) * (1 - v)**s`` over ``[0, 1]``.

    Parameters
    ----------
    a : float
        Positive frequency, at most ``1e7``.
    s : float
        Nonnegative exponent of the ``(1 - v)`` weight.
    tol : float
        Target absolute error.
    max_panels : int, optional
        Panel budget; defaults to ``max(1e5, 20 a)``. If it runs out the
        estimate is returned with its (larger) error estimate, no exception.
    """
    a = float(a)
    s = float(s)
    if not math.isfinite(a) or a <= 0:
        raise DomainError(f"frequency must be finite and positive, got {a!r}")
    if a > MAX_A:
        raise DomainError(f"frequency {a!r} exceeds supported maximum {MAX_A:g}")
    if not math.isfinite(s) or s < 0:
        raise DomainError(f"exponent must be finite and nonnegative, got {s!r}")
    if not tol > 0:
        raise DomainError(f"tolerance must be positive, got {tol!r}")
    if max_panels is None:
        max_panels = int(max(1e5, 20 * a))

    n_half = int(math.floor(a))
    edges = np.arange(n_half + 1, dtype=float) / a
    if edges[-1] < 1.0:
        edges = np.append(edges, 1.0)
    lo_all, hi_all = edges[:-1], edges[1:]

    total = 0.0
    abs_sum = 0.0
    err = 0.0
    n_evals = 0
    n_panels = len(lo_all)
    for start in range(0, len(lo_all), _CHUNK):
        lo = lo_all[start:start + _CHUNK]
        hi = hi_all[start:start + _CHUNK]
        while lo.size:
            mid = 0.5 * (lo + hi)
            whole = _gl_panels(a, s, lo, hi)
            halves = _gl_panels(a, s, lo, mid) + _gl_panels(a, s, mid, hi)
            n_evals += 3 * GL_ORDER * lo.size
            diff = np.abs(whole - halves)
            # local tolerance proportional to panel width keeps the sum <= tol
            ok = diff <= tol * (hi - lo)
            exhausted = n_panels + int((~ok).sum()) > max_panels
            if exhausted:
                ok[:] = True
            total += float(np.sum(halves[ok]))
            abs_sum += float(np.sum(np.abs(halves[ok])))
            err += float(np.sum(diff[ok]))
            lo, hi, mid = lo[~ok], hi[~ok], mid[~ok]
            n_panels += lo.size
            lo, hi = np.concatenate([lo, mid]), np.concatenate([mid, hi])
    err += 64 * _EPS * max(abs_sum, abs(total))
    return QuadratureEstimate(total, err, max(n_evals, 1))


def _sin_half_sq_series(x):
    # int_0^x (1 - cos u)/(2u) du = sum_k (-1)^(k+1) x^(2k) / (2 * 2k * (2k)!)
    x2 = x * x
    term = x2 / 2.0  # x^2/2!
    total = 0.0
    k = 1
    while True:
        contrib = term / (4.0 * k)
        total += contrib
        if abs(contrib) < 1e-18 * max(total, 1e-300):
            break
        term *= -x2 / ((2 * k + 1) * (2 * k + 2))
        k += 1
    return total


def _ci_asymptotic(x):
    # Ci(x) = f(x) sin x - g(x) cos x with the standard asymptotic f, g
    y = 1.0 / (x * x)
    f = (1.0 - 2.0 * y + 24.0 * y * y - 720.0 * y ** 3) / x
    g = (1.0 - 6.0 * y + 120.0 * y * y - 5040.0 * y ** 3) * y
    return f * math.sin(x) - g * math.cos(x)


def sin_half_sq_integral(x: float) -> float:
    """``int_0^x sin(u/2)**2 / u du``.

    The integrand tends to ``u/4`` at the origin. On ``[0, 1]`` the
    power series of ``(1 - cos u)/(2u)`` is integrated term by term; beyond
    that, unit-width Gauss-Legendre panels are summed up to ``x = 1e4``,
    and the asymptotic expansion of ``Ci`` takes over past it.
    """
    x = float(x)
    if not math.isfinite(x) or x < 0:
        raise DomainError(f"upper limit must be finite and nonnegative, got {x!r}")
    if x <= 1.0:
        return _sin_half_sq_series(x)
    if x > _ASYMPTOTIC_X:
        return 0.5 * (EULER_GAMMA + math.log(x) - _ci_asymptotic(x))
    n = int(math.ceil(x - 1.0))
    edges = np.linspace(1.0, x, n + 1)
    lo, hi = edges[:-1], edges[1:]
    half = 0.5 * (hi - lo)
    u = 0.5 * (hi + lo)[:, None] + half[:, None] * _GL_X[None, :]
    vals = np.sin(0.5 * u) ** 2 / u
    return _sin_half_sq_series(1.0) + float(math.fsum(half * (vals @ _GL_W)))


def log_factorial_ratio(r: int) -> float:
    """``log((2r)!/r!)`` via ``lgamma``."""
    return math.lgamma(2 * r + 1) - math.lgamma(r + 1)


def factorial_ratio_root(r: int) -> float:
    """``((2r)!/r!)**(1/(2r))`` computed in log space."""
    if int(r) != r or r < 1:
        raise DomainError(f"r must be a positive integer, got {r!r}")
    r = int(r)
    return math.exp(log_factorial_ratio(r) / (2 * r))
