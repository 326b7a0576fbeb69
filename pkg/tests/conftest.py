import numpy as np
import pytest

from zeta_gaps.zero_data import find_zeros


def midpoint(f, a, b, n, chunk=1_000_000):
    """Composite midpoint rule with ``n`` panels, evaluated in chunks."""
    h = (b - a) / n
    total = 0.0
    for start in range(0, n, chunk):
        k = np.arange(start, min(n, start + chunk))
        total += float(np.sum(f(a + (k + 0.5) * h)))
    return total * h


@pytest.fixture(scope="session")
def zeros_1000():
    return find_zeros(10.0, 1000.0)


@pytest.fixture(scope="session")
def zeros_100():
    return find_zeros(10.0, 100.0)
