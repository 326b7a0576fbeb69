"""Explicit bounds for normalized r-gaps between zeta zero ordinates,
with solvers for the sufficient conditions, the closed-form uniform bounds,
the moment-method bounds, and empirical gap statistics."""

__version__ = "0.1.0"

from .constants import A0, B0, OptimizedConstant, compute_A0_B0, objective
from .ctb_bounds import (closed_form_rhs, ctb_rhs, optimize_ell, solve_theta,
                         table1, uniform_check)
from .errors import DomainError, ValidationError, ZeroFileFormatError, ZetaGapsError
from .model import BoundQuery, BoundResult, Direction, Method
from .special_math import (QuadratureEstimate, factorial_ratio_root,
                           integrate_oscillatory, sin_half_sq_integral)
from .tsang_bounds import (TsangRow, solve_theta_tsang, table2, tsang_rhs,
                           uniform_tsang_check)
from .unconditional import (OscillationHypothesis, count_increment_main,
                            rvm_main_term, solve_gap_theta)
from .zero_data import (GapStatistics, ZeroTable, empirical_S, find_zeros,
                        gap_extrema, hardy_Z, load_zeros, normalized_gaps)
