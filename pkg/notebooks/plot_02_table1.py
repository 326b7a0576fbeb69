"""
Optimising the smoothing length
===============================

For each r the solver finds the largest theta with
theta < (2 ell/sqrt r) int_0^1 sin(pi a v)/(pi v) (1 - v)^(ell^2) dv
and then maximises over ell. Printed pairs are checked for a positive margin.
"""

from zeta_gaps.ctb_bounds import table1

print(" r   Theta    ell   |  vartheta  ell   | printed margins")
for row in table1(range(1, 11)):
    print(f"{row.r:2d}  {row.sup.theta:.5f}  {row.sup.ell:5.2f} |  "
          f"{row.inf.theta:.5f}  {row.inf.ell:5.2f} | "
          f"{row.printed_margin_sup:+.2e} {row.printed_margin_inf:+.2e}")
