"""The limiting gap constant ``A0 = max_B (2B/pi) arctan(pi/B^2)`` and its
maximiser ``B0``, found by golden-section search."""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache

from .errors import DomainError
from .solvers import golden_section_max

BRACKET = (0.1, 10.0)
BRACKET_TOL = 1e-8


@dataclass(frozen=True)
class OptimizedConstant:
    value: float
    argmax: float
    objective_at_argmax: float
    bracket: tuple


def objective(B: float) -> float:
    """``(2B/pi) * arctan(pi/B**2)``."""
    if not B > 0:
        raise DomainError(f"B must be positive, got {B!r}")
    return 2.0 * B / math.pi * math.atan(math.pi / (B * B))


@lru_cache(maxsize=None)
def compute_A0_B0() -> OptimizedConstant:
    """Maximise :func:`objective` on the fixed bracket ``[0.1, 10]``."""
    b, fb, _ = golden_section_max(objective, *BRACKET, tol=BRACKET_TOL)
    return OptimizedConstant(value=fb, argmax=b, objective_at_argmax=fb,
                             bracket=BRACKET)


def A0() -> float:
    return compute_A0_B0().value


def B0() -> float:
    return compute_A0_B0().argmax
