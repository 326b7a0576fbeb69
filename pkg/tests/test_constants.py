import math

import numpy as np
import pytest

from zeta_gaps.constants import BRACKET, compute_A0_B0, objective
from zeta_gaps.errors import DomainError


def test_objective_at_one():
    # direct evaluation: (2/pi) arctan(pi)
    assert objective(1.0) == pytest.approx(0.8038134760954128, abs=1e-15)


def test_objective_vanishes_at_ends():
    assert objective(1e-12) < 1e-11
    assert objective(1e6) < 1e-5


def test_objective_at_printed_maximiser():
    assert objective(1.502432) == pytest.approx(0.9064997, abs=1e-7)


@pytest.mark.parametrize("B", [0.0, -1.0])
def test_objective_domain(B):
    with pytest.raises(DomainError):
        objective(B)


def test_constants_values():
    c = compute_A0_B0()
    assert abs(c.value - 0.9064997) <= 1e-7
    assert abs(c.argmax - 1.502432) <= 1e-6
    assert c.value == c.objective_at_argmax
    assert c.bracket == BRACKET
    assert objective(c.argmax + 1e-3) < objective(c.argmax)
    assert objective(c.argmax - 1e-3) < objective(c.argmax)


def test_bracket_endpoints_below_max():
    c = compute_A0_B0()
    assert objective(BRACKET[0]) < c.value and objective(BRACKET[1]) < c.value
    assert objective(BRACKET[0]) < 0.7 and objective(BRACKET[1]) < 0.7


def test_unimodal_on_bracket():
    B = np.linspace(*BRACKET, 10_000)
    f = np.array([objective(b) for b in B])
    d = np.sign(np.diff(f))
    k = int(np.argmax(f))
    assert np.all(d[:k] > 0) and np.all(d[k:] < 0)


def test_stationarity():
    b = compute_A0_B0().argmax
    g = lambda B: B * math.atan(math.pi / B ** 2)
    h = 1e-5
    assert abs((g(b + h) - g(b - h)) / (2 * h)) < 1e-4


def test_deterministic():
    assert compute_A0_B0() == compute_A0_B0.__wrapped__()
