"""Zeta zero ordinates and their empirical gap statistics.

Ordinates are either read from a plain-text table or located as sign
changes of Hardy's Z function, evaluated with the Riemann-Siegel formula.
Gap statistics are finite-range extrema of the normalized r-gaps
``(gamma_{n+r} - gamma_n) log(gamma_n) / (2 pi r)``. They are only proxies
for the limsup/liminf constants, never estimates of them.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass, field
from pathlib import Path

import numpy as np
from numpy.polynomial import Polynomial

from .errors import DomainError, ValidationError, ZeroFileFormatError
from .model import check_r
from .solvers import golden_section_max
from .unconditional import rvm_main_term

TWO_PI = 2.0 * math.pi
Z_T_MIN, Z_T_MAX = 10.0, 1e5
FIND_T_MAX = 1e4
SCAN_STEP = 0.05
ROOT_TOL = 1e-10
FIRST_ORDINATE = 14.134725141734693
_COVERAGE_SLACK = 1e-6
_CHUNK = 20_000

# Taylor coefficients of the Riemann-Siegel remainder kernel
#   Psi(p) = cos(2 pi (p^2 - p - 1/16)) / cos(2 pi p)
# in w = 2p - 1 (even powers only; Psi is entire and even in w).
_PSI_EVEN = [
    3.82683432365089772e-1,
    4.37240468077520449e-1,
    1.32376575480343523e-1,
    -1.36050260476741887e-2,
    -1.35676219701035809e-2,
    -1.62372532314446528e-3,
    2.97053537333796908e-4,
    7.94330087952146959e-5,
    4.6556124614504505e-7,
    -1.43272516309551058e-6,
    -1.03548471123129461e-7,
    1.23579270838617381e-8,
    1.7881083857954905e-9,
    -3.39141438992703591e-11,
    -1.63266339025659051e-11,
    -3.78510931854122038e-13,
    9.32742325920172485e-14,
    5.22184301597813686e-15,
    -3.35067307274426379e-16,
    -3.41242652281172649e-17,
    5.75120334143239916e-19,
    1.48953013632115055e-19,
    1.25653727170214169e-21,
    -4.72129525014342567e-22,
    -1.326906936303962e-23,
    1.10534399951214183e-24,
    5.49964637752746551e-26,
    -1.82313765023180263e-27,
    -1.56894037377208801e-28,
]
_PSI = Polynomial(np.ravel(np.column_stack([_PSI_EVEN, np.zeros(len(_PSI_EVEN))]))[:-1])
# d^k/dp^k = 2^k d^k/dw^k
_PSI_DERIV = [_PSI] + [_PSI.deriv(k) * 2.0 ** k for k in range(1, 13)]

_PI2, _PI4, _PI6, _PI8 = (math.pi ** k for k in (2, 4, 6, 8))


class ZeroSource(str, enum.Enum):
    FILE = "file"
    COMPUTED = "computed"


@dataclass(frozen=True)
class ZeroTable:
    """Ascending zero ordinates known to be complete on ``[t_min, t_max]``."""

    ordinates: np.ndarray
    source: ZeroSource = ZeroSource.COMPUTED
    t_min: float | None = None
    t_max: float | None = None

    def __post_init__(self):
        g = np.array(self.ordinates, dtype=float)
        if g.ndim != 1:
            raise ValidationError("ordinates must be one-dimensional")
        if g.size and not np.all(np.isfinite(g)):
            raise ValidationError("ordinates must be finite")
        if g.size and g[0] <= 0:
            raise ValidationError("ordinates must be strictly positive")
        bad = np.flatnonzero(np.diff(g) < 0)
        if bad.size:
            i = int(bad[0])
            raise ValidationError(f"ordinates not ascending at index {i + 1}: {g[i + 1]!r} < {g[i]!r}")
        g.setflags(write=False)
        object.__setattr__(self, "ordinates", g)
        object.__setattr__(self, "source", ZeroSource(self.source))
        t_min = float(g[0]) if self.t_min is None and g.size else self.t_min
        t_max = float(g[-1]) if self.t_max is None and g.size else self.t_max
        if g.size and (t_min > g[0] or t_max < g[-1]):
            raise ValidationError(
                f"range [{t_min}, {t_max}] does not contain ordinates [{g[0]}, {g[-1]}]")
        object.__setattr__(self, "t_min", t_min)
        object.__setattr__(self, "t_max", t_max)

    def __len__(self):
        return len(self.ordinates)

    @property
    def complete_from_origin(self) -> bool:
        """True when no ordinate below ``t_max`` can be missing."""
        return self.t_min is not None and self.t_min <= FIRST_ORDINATE + _COVERAGE_SLACK


def _as_table(zeros) -> ZeroTable:
    return zeros if isinstance(zeros, ZeroTable) else ZeroTable(np.asarray(zeros, dtype=float))


# ---------------------------------------------------------------- file I/O

def _meta(line):
    body = line.lstrip("#").strip()
    for key in ("t_min", "t_max"):
        for sep in ("=", ":"):
            prefix = key + sep
            if body.replace(" ", "").startswith(prefix):
                return key, body.split(sep, 1)[1].strip()
    return None


def load_zeros(path) -> ZeroTable:
    """Read a zero table: one decimal ordinate per line, ascending.

    Lines starting with ``#`` are comments; ``# t_min = x`` and
    ``# t_max = x`` declare the completeness range.
    """
    path = Path(path)
    try:
        text = path.read_text(encoding="utf-8")
    except FileNotFoundError:
        raise ZeroFileFormatError("file not found", path=path) from None
    except OSError as exc:
        raise ZeroFileFormatError(f"cannot read file ({exc.strerror})", path=path) from None
    values = []
    meta = {}
    prev = None
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line:
            continue
        if line.startswith("#"):
            kv = _meta(line)
            if kv:
                try:
                    meta[kv[0]] = float(kv[1])
                except ValueError:
                    raise ZeroFileFormatError(f"bad {kv[0]} value {kv[1]!r}", path, lineno) from None
            continue
        try:
            value = float(line)
        except ValueError:
            raise ZeroFileFormatError(f"cannot parse ordinate {line!r}", path, lineno) from None
        if not math.isfinite(value) or value <= 0:
            raise ZeroFileFormatError(f"ordinate must be positive and finite, got {line!r}", path, lineno)
        if prev is not None and value < prev:
            raise ZeroFileFormatError(f"ordinates not ascending ({value!r} after {prev!r})", path, lineno)
        values.append(value)
        prev = value
    if not values:
        raise ValidationError(f"{path}: no ordinates found")
    try:
        return ZeroTable(np.array(values), ZeroSource.FILE, meta.get("t_min"), meta.get("t_max"))
    except ValidationError as exc:
        raise ValidationError(f"{path}: {exc}") from None


def save_zeros(zeros: ZeroTable, path) -> None:
    """Write ``zeros`` in the format read by :func:`load_zeros`."""
    lines = [f"# t_min = {zeros.t_min!r}", f"# t_max = {zeros.t_max!r}"]
    lines += [repr(float(g)) for g in zeros.ordinates]
    Path(path).write_text("\n".join(lines) + "\n", encoding="utf-8")


# ------------------------------------------------------- Riemann-Siegel Z

def riemann_siegel_theta(t):
    """Asymptotic expansion of the Riemann-Siegel theta function."""
    t = np.asarray(t, dtype=float)
    return (t / 2.0 * np.log(t / TWO_PI) - t / 2.0 - math.pi / 8.0
            + 1.0 / (48.0 * t) + 7.0 / (5760.0 * t ** 3))


def _remainder(p, a):
    d = [_PSI_DERIV[k](2.0 * p - 1.0) for k in range(13)]
    c0 = d[0]
    c1 = -d[3] / (96.0 * _PI2)
    c2 = d[2] / (64.0 * _PI2) + d[6] / (18432.0 * _PI4)
    c3 = -d[1] / (64.0 * _PI2) - d[5] / (3840.0 * _PI4) - d[9] / (5308416.0 * _PI6)
    c4 = (d[0] / (128.0 * _PI2) + 19.0 * d[4] / (24576.0 * _PI4)
          + 11.0 * d[8] / (5898240.0 * _PI6) + d[12] / (2038431744.0 * _PI8))
    ia = 1.0 / a
    return c0 + ia * (c1 + ia * (c2 + ia * (c3 + ia * c4)))


def _hardy_Z(t):
    a = np.sqrt(t / TWO_PI)
    N = np.floor(a).astype(int)
    p = a - N
    n = np.arange(1, int(N.max()) + 1, dtype=float)
    th = riemann_siegel_theta(t)
    phase = th[:, None] - t[:, None] * np.log(n)[None, :]
    terms = np.cos(phase) / np.sqrt(n)[None, :]
    terms[n[None, :] > N[:, None]] = 0.0
    main = 2.0 * terms.sum(axis=1)
    sign = np.where(N % 2 == 1, 1.0, -1.0)  # (-1)^(N-1)
    return main + sign * a ** -0.5 * _remainder(p, a)


def hardy_Z(t):
    """Hardy's Z function on ``10 <= t <= 1e5``.

    Riemann-Siegel main sum plus the remainder series through the
    ``a^-4`` term, ``a = sqrt(t/2pi)``. Scalars in, scalar out.
    """
    arr = np.asarray(t, dtype=float)
    flat = np.atleast_1d(arr).ravel()
    if flat.size and not (np.all(np.isfinite(flat)) and flat.min() >= Z_T_MIN
                          and flat.max() <= Z_T_MAX):
        raise DomainError(f"hardy_Z requires {Z_T_MIN:g} <= t <= {Z_T_MAX:g}")
    out = np.empty_like(flat)
    for start in range(0, flat.size, _CHUNK):
        out[start:start + _CHUNK] = _hardy_Z(flat[start:start + _CHUNK])
    if arr.ndim == 0:
        return float(out[0])
    return out.reshape(arr.shape)


def _bisect_roots(lo, hi, zlo, tol=ROOT_TOL):
    lo, hi, zlo = lo.copy(), hi.copy(), zlo.copy()
    while lo.size and np.max(hi - lo) > tol:
        mid = 0.5 * (lo + hi)
        zm = hardy_Z(mid)
        same = np.sign(zm) == np.sign(zlo)
        lo = np.where(same, mid, lo)
        zlo = np.where(same, zm, zlo)
        hi = np.where(same, hi, mid)
    return 0.5 * (lo + hi)


def _split_dips(t, z):
    """Brackets hidden inside local minima of ``|Z|`` with no sign change.

    Two close zeros can fall between adjacent scan points; the dip of
    ``|Z|`` between them is then searched for a point of opposite sign.
    """
    brackets = []
    s = np.sign(z)
    az = np.abs(z)
    idx = np.flatnonzero((s[:-2] == s[1:-1]) & (s[1:-1] == s[2:])
                         & (az[1:-1] < az[:-2]) & (az[1:-1] < az[2:])) + 1
    for i in idx:
        sgn = s[i]
        tm, _, _ = golden_section_max(lambda x: -sgn * hardy_Z(x), t[i - 1], t[i + 1], tol=1e-9)
        zm = hardy_Z(tm)
        if np.sign(zm) != sgn and zm != 0:
            brackets += [(t[i - 1], tm, z[i - 1]), (tm, t[i + 1], zm)]
    return brackets


def find_zeros(t_min: float, t_max: float, step: float = SCAN_STEP) -> ZeroTable:
    """All sign changes of ``hardy_Z`` in ``[t_min, t_max]``.

    Scans at ``step``, resolves hidden close pairs at ``|Z|`` dips, and
    bisects each bracket to ``1e-10``.
    """
    if not (Z_T_MIN <= t_min < t_max <= FIND_T_MAX):
        raise DomainError(f"find_zeros requires {Z_T_MIN:g} <= t_min < t_max <= {FIND_T_MAX:g}, "
                          f"got [{t_min!r}, {t_max!r}]")
    n = max(int(math.ceil((t_max - t_min) / step)), 1)
    t = np.linspace(t_min, t_max, n + 1)
    z = hardy_Z(t)
    exact = t[z == 0]
    change = np.flatnonzero(z[:-1] * z[1:] < 0)
    lo, hi, zlo = t[change], t[change + 1], z[change]
    extra = _split_dips(t, z)
    if extra:
        lo = np.concatenate([lo, [b[0] for b in extra]])
        hi = np.concatenate([hi, [b[1] for b in extra]])
        zlo = np.concatenate([zlo, [b[2] for b in extra]])
    roots = np.concatenate([_bisect_roots(lo, hi, zlo), exact])
    roots = np.unique(roots)
    return ZeroTable(roots, ZeroSource.COMPUTED, float(t_min), float(t_max))


# -------------------------------------------------------- gap statistics

@dataclass(frozen=True)
class GapStatistics:
    """Finite-range extrema of the normalized r-gaps; indices are 0-based
    positions ``n`` of ``gamma_n`` in the table."""

    r: int
    max_normalized: float
    min_normalized: float
    argmax_index: int
    argmin_index: int
    count: int
    mean: float = field(default=math.nan)


def normalized_gaps(zeros, r: int, scale: str = "log") -> np.ndarray:
    """``(gamma_{n+r} - gamma_n) / (2 pi r / L_n)`` for each valid ``n``.

    ``scale="log"`` uses ``L_n = log gamma_n``, the normalization of the
    gap constants. ``scale="local"`` uses ``L_n = log(gamma_n / 2 pi)``, the
    actual local density, whose mean is close to 1 even at low heights.
    """
    r = check_r(r)
    g = _as_table(zeros).ordinates
    if g.size <= r:
        raise ValidationError(f"need more than r={r} ordinates, have {g.size}")
    base = g[:-r]
    if scale == "log":
        L = np.log(base)
    elif scale == "local":
        L = np.log(base / TWO_PI)
    else:
        raise DomainError(f"unknown scale {scale!r}")
    return (g[r:] - base) * L / (TWO_PI * r)


def gap_extrema(zeros, r: int, scale: str = "log") -> GapStatistics:
    gaps = normalized_gaps(zeros, r, scale)
    i_max = int(np.argmax(gaps))
    i_min = int(np.argmin(gaps))
    return GapStatistics(r, float(gaps[i_max]), float(gaps[i_min]), i_max, i_min,
                         int(gaps.size), float(np.mean(gaps)))


def empirical_count(T: float, zeros) -> int:
    """Number of ordinates ``<= T``."""
    return int(np.searchsorted(_as_table(zeros).ordinates, T, side="right"))


def empirical_S(T: float, zeros: ZeroTable) -> float:
    """``N(T) - (T/2pi) log(T/(2 pi e)) - 7/8`` with ``N`` counted from ``zeros``.

    The table must be complete from the first ordinate up to ``T``.
    """
    zeros = _as_table(zeros)
    if not zeros.complete_from_origin:
        raise ValidationError(
            f"zero table starts at t_min={zeros.t_min!r}; counting needs coverage from the first zero")
    if T > zeros.t_max:
        raise ValidationError(f"T={T!r} exceeds table coverage t_max={zeros.t_max!r}")
    return empirical_count(T, zeros) - rvm_main_term(T)
