"""Frozen numerical constants used across the package.

Values carry more digits than a double holds so the rounded literal is the
correctly rounded one.
"""

import math

# Euler-Mascheroni constant; psi(1) = -EULER_GAMMA.
EULER_GAMMA = 0.5772156649015328606065

# log(sqrt(2*pi)), the additive constant of the Stirling series.
HALF_LOG_TWO_PI = 0.9189385332046727417803

# zeta(2) and its first two derivatives, for the shifted-divisor main-term
# density (the derivatives enter through sum_e mu(e) log^k(e) / e^2).
ZETA_2 = math.pi * math.pi / 6.0
ZETA_PRIME_2 = -0.9375482543158437537026
ZETA_DOUBLE_PRIME_2 = 1.9892802342989010234

# B_{2n} / (2n (2n-1)) for n = 1..10: coefficients of z^{1-2n} in the
# asymptotic expansion of log Gamma.
LN_GAMMA_ASYMPTOTIC = (
    8.333333333333333333333e-02,
    -2.777777777777777777778e-03,
    7.936507936507936507937e-04,
    -5.952380952380952380952e-04,
    8.417508417508417508418e-04,
    -1.917526917526917526918e-03,
    6.410256410256410256410e-03,
    -2.955065359477124183007e-02,
    1.796443723688305731649e-01,
    -1.392432216905901116427e+00,
)

# B_{2n} / (2n) for n = 1..10: coefficients of z^{-2n} in the asymptotic
# expansion of digamma.
DIGAMMA_ASYMPTOTIC = (
    8.333333333333333333333e-02,
    -8.333333333333333333333e-03,
    3.968253968253968253968e-03,
    -4.166666666666666666667e-03,
    7.575757575757575757576e-03,
    -2.109279609279609279609e-02,
    8.333333333333333333333e-02,
    -4.432598039215686274510e-01,
    3.053954330270119743804e+00,
    -2.645621212121212121212e+01,
)
