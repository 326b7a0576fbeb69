"""
The limiting constants A0 and B0
================================

A0 is the maximum of (2B/pi) arctan(pi/B^2) over B > 0, and B0 is where the
maximum is attained. Both set the large-r value of the closed-form bound.
"""

import numpy as np

from zeta_gaps.constants import compute_A0_B0, objective

c = compute_A0_B0()
print(f"A0 = {c.value:.10f}")
print(f"B0 = {c.argmax:.8f}")

# the objective is unimodal; a coarse scan agrees with the golden-section result
B = np.linspace(0.5, 4.0, 8)
for b in B:
    print(f"  B = {b:4.2f}   objective = {objective(b):.6f}")
