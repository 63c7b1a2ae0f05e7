"""Builds the optional compiled kernels; the package falls back to pure
Python when the extension is missing."""

import os

from setuptools import Extension, setup

ext_modules = []
if os.environ.get("NEUTRA_PURE_PYTHON") != "1":
    try:
        from Cython.Build import cythonize
    except ImportError:
        cythonize = None
    if cythonize is not None:
        ext_modules = cythonize(
            [Extension("neutra._kernels", ["src/neutra/_kernels.pyx"], extra_compile_args=["-O2"])],
            compiler_directives={"language_level": "3"},
        )

setup(ext_modules=ext_modules)
