"""
Uniform constants for large r
=============================

Above r = 8 a closed-form lower bound replaces the integral. Sweeping r
shows the constants hold with a positive margin throughout.
"""

from zeta_gaps.constants import A0
from zeta_gaps.ctb_bounds import (UNIFORM_INF_THETA, closed_form_brace,
                                  closed_form_rhs, uniform_check)
from zeta_gaps.model import Direction
from zeta_gaps.tsang_bounds import uniform_tsang_check

print("sup brace at r=8:", round(closed_form_brace(8, A0(), Direction.SUP), 5))
print("inf rhs at r=8:  ", round(closed_form_rhs(8, UNIFORM_INF_THETA, Direction.INF), 5))

for d, theta in ((Direction.SUP, A0()), (Direction.INF, UNIFORM_INF_THETA)):
    chk = uniform_check(d, theta, 10_000)
    print(f"{d.value}: ok={chk.ok} worst margin {chk.worst_margin:.5f} at r={chk.worst_r}")

ts = uniform_tsang_check(1000)
print(f"moment method: sup ok={ts.sup_ok} inf ok={ts.inf_ok}"
      f" (2pi threshold alone suffices from r={ts.threshold_from_r})")
