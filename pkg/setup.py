"""Build script for the optional compiled kernel module.

The package works without the extension (a pure-Python twin is selected at
import time), so a failed Cython build degrades to a source-only install.
"""

import os

from setuptools import setup

ext_modules = []
try:
    if not os.path.exists("src/rlvd/_kernels.pyx"):
        raise ImportError
    from Cython.Build import cythonize
    from setuptools import Extension

    ext_modules = cythonize(
        [
            Extension(
                "rlvd._kernels",
                ["src/rlvd/_kernels.pyx"],
                extra_compile_args=["-O3"],
            )
        ],
        compiler_directives={"language_level": "3"},
    )
except ImportError:
    pass

setup(ext_modules=ext_modules)
