"""Build script: compiles the optional Cython kernel extension.

The package works without the extension (a NumPy fallback is selected at
import time), so any failure here downgrades to a pure-Python install
instead of aborting.
"""

from setuptools import setup

ext_modules = []
try:
    from Cython.Build import cythonize
    from setuptools.extension import Extension

    ext_modules = cythonize(
        [
            Extension(
                "divisorlab._kernels._cykernels",
                ["src/divisorlab/_kernels/_cykernels.pyx"],
            )
        ],
        compiler_directives={"language_level": "3"},
    )
except Exception as exc:  # pragma: no cover - build-environment dependent
    print(f"divisorlab: skipping compiled kernels ({exc!r}); "
          "the NumPy fallback will be used")

setup(ext_modules=ext_modules)
