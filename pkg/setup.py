"""Build script: compiles the optional accelerator extension.

The package is pure Python plus one optional Cython extension
(indigraph._kernels._core).  If Cython is unavailable the build proceeds
without it and the package falls back to the pure-Python kernel at import
time.
"""

import os

from setuptools import Extension, setup

ext_modules = []
_PYX = "src/indigraph/_kernels/_core.pyx"
if os.path.exists(_PYX):
    try:
        from Cython.Build import cythonize

        ext_modules = cythonize(
            [Extension("indigraph._kernels._core", [_PYX])],
            language_level=3,
        )
    except ImportError:
        pass

setup(ext_modules=ext_modules)
