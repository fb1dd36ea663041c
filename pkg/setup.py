"""Build script: compiles the native census-scan kernel when Cython and a C
compiler are available.  The package works without it (pure-Python fallback
selected at import time), so the extension is marked optional.
"""

import os

from setuptools import Extension, setup

extensions = []
if not os.environ.get("CANONPOLY_SKIP_NATIVE"):
    try:
        from Cython.Build import cythonize

        ext = Extension(
            "canonpoly._scan_native",
            ["src/canonpoly/_scan_native.pyx"],
            extra_compile_args=["-O3"],
        )
        ext.optional = True
        extensions = cythonize([ext], compiler_directives={"language_level": "3"})
    except ImportError:
        extensions = []

setup(ext_modules=extensions)
