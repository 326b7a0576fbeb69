"""
Moment-method constants
=======================

Solving theta = prefactor(r) sqrt(J(X)) with J(x) = int_0^x sin^2(u/2)/u du
for both signs of the window perturbation.
"""

from zeta_gaps.tsang_bounds import TABLE2_PRINTED, table2

for row in table2(range(1, 21)):
    ps, pi = TABLE2_PRINTED[row.r]
    print(f"r={row.r:2d}  sup {row.theta_sup:.6f} (printed {ps})"
          f"  inf {row.theta_inf:.6f} (printed {pi})")
