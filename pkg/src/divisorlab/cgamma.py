"""Complex log-gamma and digamma on the half-plane Re z > -20.

Evaluation strategy: shift the argument up by the recurrence
Gamma(z+1) = z Gamma(z) until Re z >= 10, apply the Stirling series with
Bernoulli coefficients through B_20, then subtract the accumulated logs.
That keeps every branch decision inside ``log`` and avoids rational
approximation tables.  Ratios of gamma values are always taken as
exp of log differences downstream, never as quotients, because the
integrands mix e^{+-pi r} factors that overflow individually near r = 250.

The scalar functions here validate the domain and guarantee finite output;
the array variants (``ln_gamma_array``, ``digamma_array``) are the raw
kernels, total on Re z > -30, returning IEEE infinities at poles.
"""

import math

import numpy as np

from . import _kernels
from .errors import DomainError, PoleError

RE_MIN = -20.0
IM_MAX = 1.0e6
ABS_SQ_T_MAX = 200.0

ln_gamma_array = _kernels.ln_gamma
digamma_array = _kernels.digamma


def _validate(z: complex) -> complex:
    z = complex(z)
    if not (math.isfinite(z.real) and math.isfinite(z.imag)):
        raise DomainError(f"non-finite argument {z!r}")
    if z.real <= RE_MIN or abs(z.imag) > IM_MAX:
        raise DomainError(
            f"argument {z!r} outside Re z > {RE_MIN}, |Im z| <= {IM_MAX:g}")
    if z.imag == 0.0 and z.real <= 0.0 and z.real == math.floor(z.real):
        raise PoleError(f"gamma pole at {z!r}")
    return z


def ln_gamma(z: complex) -> complex:
    """Principal branch of log Gamma(z)."""
    z = _validate(z)
    out = complex(ln_gamma_array(np.array([z]))[0])
    if not (math.isfinite(out.real) and math.isfinite(out.imag)):
        raise DomainError(f"ln_gamma overflowed at {z!r}")
    return out


def digamma(z: complex) -> complex:
    """psi(z) = Gamma'(z)/Gamma(z)."""
    z = _validate(z)
    out = complex(digamma_array(np.array([z]))[0])
    if not (math.isfinite(out.real) and math.isfinite(out.imag)):
        raise DomainError(f"digamma overflowed at {z!r}")
    return out


def gamma_abs_sq_critical(t: float) -> float:
    """|Gamma(1/2 + it)|^2 = pi / cosh(pi t), exact on |t| <= 200.

    Serves as the independent oracle for the critical-line checks of
    ``ln_gamma``.
    """
    t = float(t)
    if not math.isfinite(t) or abs(t) > ABS_SQ_T_MAX:
        raise DomainError(f"|t| <= {ABS_SQ_T_MAX:g} required, got {t!r}")
    return math.pi / math.cosh(math.pi * t)
