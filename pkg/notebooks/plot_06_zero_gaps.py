"""
Zeros on the critical line and their gaps
=========================================

Zeros come from sign changes of the Hardy Z function, evaluated by the
Riemann-Siegel formula. Normalised r-gaps divide by 2 pi r / log(gamma_n);
at this height that scale overstates the local spacing, so the "local"
scale, which uses log(gamma_n / 2 pi), is shown next to it.
"""

import numpy as np

from zeta_gaps.zero_data import empirical_S, find_zeros, gap_extrema

zeros = find_zeros(10.0, 1000.0)
print(len(zeros), "zeros, first", zeros.ordinates[:3])

T = np.linspace(20, 1000, 981)
S = np.array([empirical_S(t, zeros) for t in T])
print(f"max |S(T)| on [20, 1000]: {np.abs(S).max():.3f}")

for scale in ("log", "local"):
    for r in range(1, 6):
        st = gap_extrema(zeros, r, scale)
        print(f"{scale:5s} r={r}  mean {st.mean:.3f}  min {st.min_normalized:.3f}"
              f"  max {st.max_normalized:.3f}")
