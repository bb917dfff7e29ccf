"""Exact shifted divisor correlations and the published error-bound envelopes.

The correlation sum_{n<=M} d(n) d(n+f) is computed exactly from a sieved
table; the smooth main term is integrated from the classical singular-series
density, and the residual error term feeds a log-log exponent fit.  The
three right-hand-side evaluators (``mot``, ``meur``, ``new``) implement the
published bounds literally with implied constant 1, for regime comparison
only.
"""

import math
import warnings
from dataclasses import dataclass, field
from functools import lru_cache

import numpy as np

from . import _kernels
from .constants import EULER_GAMMA, ZETA_2, ZETA_PRIME_2, ZETA_DOUBLE_PRIME_2
from .errors import (
    CapacityError,
    DomainError,
    InsufficientDataError,
    RangeError,
)

N_MAX_CAP = 2 ** 31
DEFAULT_ALPHA = 7.0 / 64.0
DEFAULT_EPSILON = 0.01
BOUND_KINDS = ("mot", "meur", "new")

# Coefficients of the main-term density in powers of the log factors:
# sum over divisors d | f of (1/d) [ A0*L1*L2 + A1*(L1+L2) + A2 ] with
# L1 = log(x/d^2) + 2 gamma, L2 = log((x+f)/d^2) + 2 gamma.  A1 and A2 come
# from the Moebius log-moments sum_e mu(e) log^k(e)/e^2 of the singular
# series; dropping them leaves a spurious M log M component in the error
# term and ruins the exponent measurement.
_A0 = 1.0 / ZETA_2
_A1 = -2.0 * ZETA_PRIME_2 / ZETA_2 ** 2
_A2 = 4.0 * (2.0 * ZETA_PRIME_2 ** 2 / ZETA_2 ** 3
             - ZETA_DOUBLE_PRIME_2 / ZETA_2 ** 2)


@dataclass(frozen=True)
class DivisorTable:
    """Immutable divisor-count table: counts[n] = d(n) for 1 <= n <= n_max."""

    n_max: int
    counts: np.ndarray

    def __post_init__(self):
        self.counts.flags.writeable = False


@dataclass
class ExperimentConfig:
    """Grid description for a divisor-correlation experiment run."""

    shifts: list
    m_grid: list
    alpha: float = DEFAULT_ALPHA
    epsilon: float = DEFAULT_EPSILON
    output_path: str = "."

    def __post_init__(self):
        if not self.shifts or not self.m_grid:
            raise DomainError("shifts and m_grid must be non-empty")
        if not 0.0 <= self.alpha <= 0.5:
            raise DomainError(f"alpha must lie in [0, 1/2], got {self.alpha}")
        if self.epsilon <= 0.0:
            raise DomainError(f"epsilon must be positive, got {self.epsilon}")
        for f in self.shifts:
            if f < 1:
                raise DomainError(f"shift {f} < 1")
        for m in self.m_grid:
            if m < 2:
                raise DomainError(f"grid point M={m} < 2")
        for f in self.shifts:
            for m in self.m_grid:
                if not f < m * m:
                    raise DomainError(f"shift f={f} >= M^2 for M={m}")


@dataclass
class BoundReport:
    """One verification row: exact data next to the theoretical envelopes."""

    m: int
    f: int
    correlation: int
    main_term: float
    error_term: float
    bound_mot: float
    bound_meur: float
    bound_new: float
    regime: str


def sieve_divisor_counts(n_max: int) -> DivisorTable:
    """Build d(1..n_max) exactly with the harmonic sieve."""
    n_max = int(n_max)
    if n_max < 1 or n_max > N_MAX_CAP:
        raise RangeError(f"n_max must lie in [1, 2^31], got {n_max}")
    try:
        counts = _kernels.divisor_sieve(n_max)
    except MemoryError as exc:
        raise CapacityError(
            f"cannot allocate divisor table to {n_max} "
            f"({2 * (n_max + 1)} bytes needed)") from exc
    return DivisorTable(n_max=n_max, counts=counts)


def divisor_correlation(table: DivisorTable, m: int, f: int) -> int:
    """Exact sum_{n=1..m} d(n) d(n+f)."""
    m, f = int(m), int(f)
    if m < 1 or f < 1:
        raise RangeError(f"need m >= 1 and f >= 1, got m={m}, f={f}")
    if m + f > table.n_max:
        raise RangeError(
            f"m + f = {m + f} exceeds table n_max = {table.n_max}")
    return int(_kernels.correlation(table.counts, m, f))


def _divisors(f: int):
    small, large = [], []
    k = 1
    while k * k <= f:
        if f % k == 0:
            small.append(k)
            if k * k != f:
                large.append(f // k)
        k += 1
    return small + large[::-1]


@lru_cache(maxsize=8)
def _gauss_legendre(nodes: int):
    x, w = np.polynomial.legendre.leggauss(nodes)
    return x, w


def main_term(m: int, f: int, *, nodes: int = 64) -> float:
    """Smooth main term of the correlation, integrated over [0, M].

    The density is quadratic in the two log factors; the integral is taken
    over dyadic panels accumulating toward 0 (the integrand has a log
    singularity there), each panel with Gauss-Legendre quadrature.
    ``nodes`` doubles as the independent-oracle knob: re-evaluating at
    twice the node count gives a quadrature error estimate.
    """
    m, f = int(m), int(f)
    if m < 2:
        raise DomainError(f"main term needs M >= 2, got {m}")
    if f < 1:
        raise DomainError(f"shift must be positive, got {f}")
    x_ref, w_ref = _gauss_legendre(nodes)

    divs = np.array(_divisors(f), dtype=np.float64)
    inv_d = 1.0 / divs
    two_log_d = 2.0 * np.log(divs)

    # Panel edges M*2^-71, ..., M/2, M plus the stub [0, M*2^-71]; the stub
    # is ~1e-15*M wide, so its quadrature error is far below double rounding
    # of the total.
    n_panels = 71
    edges = m * 2.0 ** -np.arange(n_panels + 1, dtype=np.float64)
    lo = np.concatenate(([0.0], edges[::-1][:-1]))
    hi = edges[::-1]

    half = 0.5 * (hi - lo)
    mid = 0.5 * (hi + lo)
    x = mid[:, None] + half[:, None] * x_ref[None, :]       # (panel, node)
    weight = half[:, None] * w_ref[None, :]

    log_x = np.log(x)
    log_xf = np.log(x + f)
    total = 0.0
    for j in range(divs.size):
        l1 = log_x - two_log_d[j] + 2.0 * EULER_GAMMA
        l2 = log_xf - two_log_d[j] + 2.0 * EULER_GAMMA
        density = _A0 * l1 * l2 + _A1 * (l1 + l2) + _A2
        total += inv_d[j] * float(np.sum(density * weight))
    return total


def error_term(table: DivisorTable, m: int, f: int) -> float:
    """Measured error: exact correlation minus smooth main term."""
    return float(divisor_correlation(table, m, f)) - main_term(m, f)


def exponent_fit(series) -> float:
    """Least-squares slope of log|E| against log M.

    Zero entries are dropped with a warning (the error term fluctuates in
    sign and may pass through zero); at least five positive points must
    remain.
    """
    pairs = [(float(m), float(e)) for m, e in series]
    if len(pairs) < 5:
        raise InsufficientDataError(
            f"exponent fit needs >= 5 points, got {len(pairs)}")
    kept = [(m, e) for m, e in pairs if e > 0.0]
    dropped = len(pairs) - len(kept)
    if dropped:
        warnings.warn(f"exponent_fit: dropped {dropped} zero entries",
                      stacklevel=2)
    if len(kept) < 5:
        raise InsufficientDataError(
            f"only {len(kept)} positive points remain after dropping zeros")
    log_m = np.log([m for m, _ in kept])
    log_e = np.log([e for _, e in kept])
    slope, _ = np.polyfit(log_m, log_e, 1)
    return float(slope)


def crossover_shift(m: int, alpha: float = DEFAULT_ALPHA) -> float:
    """The shift size M^(2/(1+4 alpha)) above which the newer bound applies."""
    return float(m) ** (2.0 / (1.0 + 4.0 * alpha))


def regime(m: int, f: int, alpha: float = DEFAULT_ALPHA) -> str:
    return ("above_crossover" if f > crossover_shift(m, alpha)
            else "below_crossover")


def bound_rhs(m: int, f: int, alpha: float, epsilon: float,
              which: str) -> float:
    """Literal right-hand side of one of the three published bounds.

    Implied constants are set to 1; callers compare regimes and ratios,
    never absolute sizes.  Raises RangeError outside the bound's stated
    validity range in (M, f).
    """
    m, f = int(m), int(f)
    mf, ff = float(m), float(f)
    if m < 2 or f < 1:
        raise RangeError(f"need M >= 2 and f >= 1, got M={m}, f={f}")
    which = which.lower()
    if which == "mot":
        if ff > mf ** (2.0 / (1.0 + 2.0 * alpha)):
            raise RangeError(
                f"f={f} above M^(2/(1+2a)) validity limit for M={m}")
        s = mf * mf + mf * ff
        return (s ** (1.0 / 3.0 + epsilon)
                + ff ** (0.125 + 0.5 * alpha) * s ** (0.25 + epsilon)
                + ff ** (0.5 + alpha) * mf ** epsilon)
    if which == "meur":
        if ff > mf ** (2.0 - epsilon):
            raise RangeError(
                f"f={f} above M^(2-eps) validity limit for M={m}")
        s = mf * mf + mf * ff
        return (s ** (1.0 / 3.0) * mf ** epsilon
                + s ** 0.25 * mf ** epsilon
                * min(mf ** 0.25, ff ** (0.125 + 0.5 * alpha)))
    if which == "new":
        if not (crossover_shift(m, alpha) < ff < mf ** (2.0 - epsilon)):
            raise RangeError(
                f"f={f} outside (M^(2/(1+4a)), M^(2-eps)) for M={m}")
        return (ff ** epsilon
                * (ff ** (1.0 / 3.0) * mf ** (1.0 / 3.0)
                   + ff ** 0.25 * mf ** 0.5))
    raise DomainError(f"unknown bound kind {which!r}; expected {BOUND_KINDS}")


def _bound_or_nan(m, f, alpha, epsilon, which):
    try:
        return bound_rhs(m, f, alpha, epsilon, which)
    except RangeError:
        return math.nan


def bound_report(table: DivisorTable, m: int, f: int,
                 alpha: float = DEFAULT_ALPHA,
                 epsilon: float = DEFAULT_EPSILON) -> BoundReport:
    """Assemble one scan row; bounds outside their validity range are NaN."""
    corr = divisor_correlation(table, m, f)
    mt = main_term(m, f)
    return BoundReport(
        m=m,
        f=f,
        correlation=corr,
        main_term=mt,
        error_term=float(corr) - mt,
        bound_mot=_bound_or_nan(m, f, alpha, epsilon, "mot"),
        bound_meur=_bound_or_nan(m, f, alpha, epsilon, "meur"),
        bound_new=_bound_or_nan(m, f, alpha, epsilon, "new"),
        regime=regime(m, f, alpha),
    )
