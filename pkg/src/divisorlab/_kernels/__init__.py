"""Kernel backend selection.

The compiled Cython extension is preferred; the NumPy implementation is a
drop-in fallback so a pure-Python install stays fully functional.  Set
``DIVISORLAB_FORCE_PY=1`` in the environment to force the fallback (used by
the benchmark and by tests that compare the two backends).
"""

import os

from . import _pykernels

if os.environ.get("DIVISORLAB_FORCE_PY") == "1":
    _impl = _pykernels
    BACKEND = "python"
else:
    try:
        from . import _cykernels as _impl
        BACKEND = "compiled"
    except ImportError:
        _impl = _pykernels
        BACKEND = "python"

ln_gamma = _impl.ln_gamma
digamma = _impl.digamma
divisor_sieve = _impl.divisor_sieve
correlation = _impl.correlation


def available_backends():
    """Importable kernel backends, keyed by name."""
    backends = {"python": _pykernels}
    try:
        from . import _cykernels
        backends["compiled"] = _cykernels
    except ImportError:
        pass
    return backends
