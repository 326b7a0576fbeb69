"""Query and result records shared by the bound solvers."""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Optional

from .errors import DomainError


class Direction(str, enum.Enum):
    """``SUP`` bounds the limsup (frequency ``r + theta sqrt r``),
    ``INF`` the liminf (frequency ``r - theta sqrt r``)."""

    SUP = "sup"
    INF = "inf"

    @property
    def sign(self) -> int:
        return 1 if self is Direction.SUP else -1


class Method(str, enum.Enum):
    CTB_INTEGRAL = "ctb"
    CTB_CLOSED_FORM = "ctb-closed-form"
    TSANG = "tsang"
    UNCONDITIONAL = "unconditional"


def as_direction(direction) -> Direction:
    try:
        return Direction(direction.lower() if isinstance(direction, str) else direction)
    except ValueError:
        raise DomainError(f"unknown direction {direction!r}") from None


def check_r(r) -> int:
    if isinstance(r, bool) or int(r) != r or r < 1:
        raise DomainError(f"r must be a positive integer, got {r!r}")
    return int(r)


@dataclass(frozen=True)
class BoundQuery:
    r: int
    direction: Direction
    method: Method

    def __post_init__(self):
        object.__setattr__(self, "r", check_r(self.r))
        object.__setattr__(self, "direction", as_direction(self.direction))
        object.__setattr__(self, "method", Method(self.method))


@dataclass(frozen=True)
class BoundResult:
    """A solved gap constant.

    ``margin`` is ``rhs(theta) - theta``; it is strictly positive whenever
    ``theta > 0``. A zero ``theta`` with zero margin means no positive
    solution exists.
    """

    r: int
    direction: Direction
    theta: float
    ell: Optional[float]
    margin: float
    method: Method
