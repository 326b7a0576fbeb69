"""
Gaps from an oscillation hypothesis
===================================

If S(t + h) - S(t) oscillates by at least c (h log T)^beta, gaps of size
1 +/- theta / r^(1 - beta) follow for every theta below the fixed point of
theta = c (2 pi)^beta (1 +/- theta r^(beta - 1))^beta.
"""

import numpy as np

from zeta_gaps.model import Direction
from zeta_gaps.unconditional import OscillationHypothesis, solve_gap_theta

hyp = OscillationHypothesis(c=1.0, beta=1 / 3)
print("(2 pi)^(1/3) =", (2 * np.pi) ** (1 / 3))
for r in (1, 10, 100, 10 ** 4, 10 ** 6):
    print(f"r={r:>7}  sup {solve_gap_theta(hyp, r, Direction.SUP):.6f}"
          f"  inf {solve_gap_theta(hyp, r, Direction.INF):.6f}")

# the fixed point approaches (2 pi)^beta only like r^(-2/3)
for c in np.linspace(0.25, 2.0, 8):
    h = OscillationHypothesis(float(c))
    print(f"c={c:.2f}  theta_sup(r=10) = {solve_gap_theta(h, 10, Direction.SUP):.5f}")
