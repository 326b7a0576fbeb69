"""Derivative-free scalar solvers: golden-section maximisation and
last-crossing bisection for implicit inequalities ``theta < rhs(theta)``."""

from __future__ import annotations

import math
from typing import Callable

INV_PHI = (math.sqrt(5.0) - 1.0) / 2.0
INV_PHI_SQ = (3.0 - math.sqrt(5.0)) / 2.0


def golden_section_max(f: Callable[[float], float], a: float, b: float,
                       tol: float = 1e-8, max_iter: int = 500):
    """Maximise a unimodal ``f`` on ``[a, b]``.

    Returns ``(xbest, fbest, n_evals)``. The bracket is shrunk until its
    width is at most ``tol``; the best sampled point is returned.
    """
    a, b = min(a, b), max(a, b)
    h = b - a
    c = a + INV_PHI_SQ * h
    d = a + INV_PHI * h
    fc = f(c)
    fd = f(d)
    n = 2
    while h > tol and n < max_iter:
        if fc > fd:
            b, d, fd = d, c, fc
            h = b - a
            c = a + INV_PHI_SQ * h
            fc = f(c)
        else:
            a, c, fc = c, d, fd
            h = b - a
            d = a + INV_PHI * h
            fd = f(d)
        n += 1
    if fc > fd:
        return c, fc, n
    return d, fd, n


def last_crossing(margin: Callable[[float], float], lo: float, hi: float,
                  tol: float = 1e-6, n_scan: int = 8):
    """Largest ``x`` in ``[lo, hi]`` with ``margin(x) > 0``, to within ``tol``.

    ``margin`` is typically ``rhs(x) - x``. The interval is scanned downward
    from ``hi`` in ``n_scan`` steps to isolate the last sign change, then
    bisected. Returns ``(x, margin(x))`` where the margin is strictly
    positive, or ``(lo, margin(lo))`` if even ``lo`` fails.
    """
    m_hi = margin(hi)
    if m_hi > 0:
        return hi, m_hi
    step = (hi - lo) / n_scan
    upper = hi
    x = hi
    m = m_hi
    for k in range(1, n_scan + 1):
        x = hi - k * step if k < n_scan else lo
        m = margin(x)
        if m > 0:
            break
        upper = x
    else:
        return lo, m
    lower, m_lower = x, m
    while upper - lower > tol:
        mid = 0.5 * (lower + upper)
        m_mid = margin(mid)
        if m_mid > 0:
            lower, m_lower = mid, m_mid
        else:
            upper = mid
    return lower, m_lower
