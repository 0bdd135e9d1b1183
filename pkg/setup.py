"""Build script: compiles the optional kernel extension when Cython is available.

The package is fully functional without the extension (a pure-Python
implementation of the same kernels is selected at import time), so any
build failure here downgrades to a source-only install instead of aborting.
"""

import os

from setuptools import Extension, setup


def _extensions():
    if os.environ.get("BALMAT_NO_EXT") == "1":
        return []
    try:
        from Cython.Build import cythonize
    except ImportError:
        return []
    ext = Extension(
        "balmat._kernels._ckernels",
        sources=["src/balmat/_kernels/_ckernels.pyx"],
        # -ffp-contract=off: no fused multiply-add, so the compiled kernels
        # produce bit-identical results to the pure-Python fallback.
        extra_compile_args=["-O2", "-ffp-contract=off"],
    )
    return cythonize([ext], compiler_directives={"language_level": "3"})


setup(ext_modules=_extensions())
