"""divisorlab: numerical verification of shifted divisor correlations.

Library layers, bottom up:

* :mod:`divisorlab.cgamma` - complex log-gamma / digamma core.
* :mod:`divisorlab.hyp2f1` - the balanced Gauss hypergeometric function
  F(1/2+ir, 1/2+ir; 1+2ir; -y) through three cross-validating backends
  plus its large-y expansion.
* :mod:`divisorlab.remainder` - the shifted-contour remainder integral and
  its seven-piece absolute-value majorant.
* :mod:`divisorlab.spectral_weight` - the smoothed window transform
  Lambda(r, Z) and the derived weight Theta.
* :mod:`divisorlab.divisor` - exact divisor-correlation experiments and the
  published error-bound evaluators.
* :mod:`divisorlab.cli` - the ``divisorlab`` command-line driver.

Hot kernels live in :mod:`divisorlab._kernels` with a compiled extension
and a NumPy fallback selected at import (``divisorlab.KERNEL_BACKEND``
names the active one).
"""

from ._kernels import BACKEND as KERNEL_BACKEND

__version__ = "0.1.0"

__all__ = ["KERNEL_BACKEND", "__version__"]
