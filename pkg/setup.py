"""Build the optional Cython kernels; without Cython the pure-Python fallback is used."""

import os

from setuptools import setup

ext_modules = []
if not os.environ.get("CONERING_NO_EXT"):
    try:
        from Cython.Build import cythonize
        from setuptools import Extension

        ext_modules = cythonize(
            [Extension("conering._ckernels", ["src/conering/_ckernels.pyx"], extra_compile_args=["-O2"])],
            compiler_directives={"language_level": "3"},
        )
    except ImportError:
        ext_modules = []

setup(ext_modules=ext_modules)
