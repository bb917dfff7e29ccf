"""NumPy implementations of the hot kernels.

These are the fallback used when the compiled extension is unavailable.
Both backends share the same contract:

* ``ln_gamma`` / ``digamma`` are total on arrays with ``Re z > -30``;
  poles produce IEEE infinities instead of raising.  Domain policing is
  the caller's job (see :mod:`divisorlab.cgamma`).
* ``divisor_sieve`` returns exact 16-bit divisor counts ``d(0..n_max)``
  (index 0 unused).
* ``correlation`` accumulates ``sum_{n<=m} d(n) d(n+f)`` in int64.
"""

import numpy as np

from ..constants import (
    DIGAMMA_ASYMPTOTIC,
    HALF_LOG_TWO_PI,
    LN_GAMMA_ASYMPTOTIC,
)

# Recurrence target: the Stirling tail with 10 Bernoulli terms is below
# 1e-19 once Re z >= 10.
_SHIFT_RE = 10.0
_KERNEL_RE_MIN = -30.0


def _shift_up(z):
    """Recurrence accumulator: returns (z_shifted, acc) with
    ln Gamma(z) = ln Gamma(z_shifted) - acc and Re z_shifted >= _SHIFT_RE."""
    if np.any(z.real < _KERNEL_RE_MIN):
        raise ValueError("kernel ln_gamma/digamma requires Re z > -30")
    acc = np.zeros_like(z)
    mask = z.real < _SHIFT_RE
    with np.errstate(divide="ignore", invalid="ignore"):
        while np.any(mask):
            acc[mask] += np.log(z[mask])
            z[mask] += 1.0
            mask = z.real < _SHIFT_RE
    return z, acc


def ln_gamma(z):
    """Principal-branch log Gamma on a complex array."""
    z = np.array(z, dtype=np.complex128, copy=True)
    shape = z.shape
    z = np.atleast_1d(z).ravel()
    z, acc = _shift_up(z)
    rz = 1.0 / z
    rz2 = rz * rz
    tail = np.full_like(z, LN_GAMMA_ASYMPTOTIC[-1])
    for c in LN_GAMMA_ASYMPTOTIC[-2::-1]:
        tail = tail * rz2 + c
    out = (z - 0.5) * np.log(z) - z + HALF_LOG_TWO_PI + tail * rz - acc
    return out.reshape(shape)


def digamma(z):
    """Digamma on a complex array, same recurrence-plus-asymptotic scheme."""
    z = np.array(z, dtype=np.complex128, copy=True)
    shape = z.shape
    z = np.atleast_1d(z).ravel()
    acc = np.zeros_like(z)
    mask = z.real < _SHIFT_RE
    if np.any(z.real < _KERNEL_RE_MIN):
        raise ValueError("kernel ln_gamma/digamma requires Re z > -30")
    with np.errstate(divide="ignore", invalid="ignore"):
        while np.any(mask):
            acc[mask] += 1.0 / z[mask]
            z[mask] += 1.0
            mask = z.real < _SHIFT_RE
    rz = 1.0 / z
    rz2 = rz * rz
    tail = np.full_like(z, DIGAMMA_ASYMPTOTIC[-1])
    for c in DIGAMMA_ASYMPTOTIC[-2::-1]:
        tail = tail * rz2 + c
    out = np.log(z) - 0.5 * rz - tail * rz2 - acc
    return out.reshape(shape)


def divisor_sieve(n_max):
    """Exact divisor-count table via the harmonic sieve.

    Divisors k <= n_max//64 are added with strided slices; larger divisors
    are grouped by their cofactor q = n/k < 64, which keeps the Python-level
    loop count at O(n_max/64) instead of O(n_max).
    """
    counts = np.zeros(n_max + 1, dtype=np.uint16)
    if n_max < 4096:
        for k in range(1, n_max + 1):
            counts[k::k] += 1
        return counts
    q_cap = 64
    k_cap = n_max // q_cap
    for k in range(1, k_cap + 1):
        counts[k::k] += 1
    for q in range(1, q_cap):
        counts[(k_cap + 1) * q:: q] += 1
    return counts


def correlation(counts, m, f):
    """sum_{n=1..m} d(n) d(n+f) as an exact Python int."""
    total = 0
    chunk = 1 << 20
    for lo in range(1, m + 1, chunk):
        hi = min(m + 1, lo + chunk)
        a = counts[lo:hi].astype(np.int64)
        b = counts[lo + f: hi + f].astype(np.int64)
        total += int(a @ b)
    return total
