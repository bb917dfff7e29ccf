# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled implementations of the hot kernels.

Contract-identical to ``_pykernels``; see that module for the semantics.
"""

import numpy as np


cdef extern from "complex.h" nogil:
    double complex clog(double complex)
    double creal(double complex)


# B_{2n}/(2n(2n-1)) and B_{2n}/(2n), n = 1..10 (same values as
# divisorlab.constants; duplicated here so the extension stays self-contained).
cdef double[10] LNG_C
LNG_C[0] = 8.333333333333333333333e-02
LNG_C[1] = -2.777777777777777777778e-03
LNG_C[2] = 7.936507936507936507937e-04
LNG_C[3] = -5.952380952380952380952e-04
LNG_C[4] = 8.417508417508417508418e-04
LNG_C[5] = -1.917526917526917526918e-03
LNG_C[6] = 6.410256410256410256410e-03
LNG_C[7] = -2.955065359477124183007e-02
LNG_C[8] = 1.796443723688305731649e-01
LNG_C[9] = -1.392432216905901116427e+00

cdef double[10] PSI_C
PSI_C[0] = 8.333333333333333333333e-02
PSI_C[1] = -8.333333333333333333333e-03
PSI_C[2] = 3.968253968253968253968e-03
PSI_C[3] = -4.166666666666666666667e-03
PSI_C[4] = 7.575757575757575757576e-03
PSI_C[5] = -2.109279609279609279609e-02
PSI_C[6] = 8.333333333333333333333e-02
PSI_C[7] = -4.432598039215686274510e-01
PSI_C[8] = 3.053954330270119743804e+00
PSI_C[9] = -2.645621212121212121212e+01

cdef double HALF_LOG_TWO_PI = 0.9189385332046727417803
cdef double SHIFT_RE = 10.0


cdef inline double complex _ln_gamma_one(double complex z) nogil:
    cdef double complex acc = 0.0
    cdef double complex rz, rz2, tail
    cdef int i
    while creal(z) < SHIFT_RE:
        acc = acc + clog(z)
        z = z + 1.0
    rz = 1.0 / z
    rz2 = rz * rz
    tail = LNG_C[9]
    for i in range(8, -1, -1):
        tail = tail * rz2 + LNG_C[i]
    return (z - 0.5) * clog(z) - z + HALF_LOG_TWO_PI + tail * rz - acc


cdef inline double complex _digamma_one(double complex z) nogil:
    cdef double complex acc = 0.0
    cdef double complex rz, rz2, tail
    cdef int i
    while creal(z) < SHIFT_RE:
        acc = acc + 1.0 / z
        z = z + 1.0
    rz = 1.0 / z
    rz2 = rz * rz
    tail = PSI_C[9]
    for i in range(8, -1, -1):
        tail = tail * rz2 + PSI_C[i]
    return clog(z) - 0.5 * rz - tail * rz2 - acc


def ln_gamma(z):
    z = np.ascontiguousarray(z, dtype=np.complex128)
    shape = z.shape
    flat = np.atleast_1d(z).ravel()
    if np.any(flat.real < -30.0):
        raise ValueError("kernel ln_gamma/digamma requires Re z > -30")
    out = np.empty_like(flat)
    cdef double complex[::1] zv = flat
    cdef double complex[::1] ov = out
    cdef Py_ssize_t i, n = zv.shape[0]
    with nogil:
        for i in range(n):
            ov[i] = _ln_gamma_one(zv[i])
    return out.reshape(shape)


def digamma(z):
    z = np.ascontiguousarray(z, dtype=np.complex128)
    shape = z.shape
    flat = np.atleast_1d(z).ravel()
    if np.any(flat.real < -30.0):
        raise ValueError("kernel ln_gamma/digamma requires Re z > -30")
    out = np.empty_like(flat)
    cdef double complex[::1] zv = flat
    cdef double complex[::1] ov = out
    cdef Py_ssize_t i, n = zv.shape[0]
    with nogil:
        for i in range(n):
            ov[i] = _digamma_one(zv[i])
    return out.reshape(shape)


def divisor_sieve(n_max):
    counts = np.zeros(n_max + 1, dtype=np.uint16)
    cdef unsigned short[::1] c = counts
    cdef long long k, j, n = n_max
    with nogil:
        for k in range(1, n + 1):
            j = k
            while j <= n:
                c[j] += 1
                j += k
    return counts


def correlation(counts, m, f):
    cdef const unsigned short[::1] c = counts
    cdef long long i, mm = m, ff = f
    cdef long long total = 0
    with nogil:
        for i in range(1, mm + 1):
            total += <long long> c[i] * <long long> c[i + ff]
    return total
