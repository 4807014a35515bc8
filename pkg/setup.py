"""Build script: compiles the optional tableau-pivot extension.

The package is pure Python plus one small Cython module with the hot
simplex-pivot loops.  The extension is strictly optional: if Cython or a C
compiler is unavailable (or GAUGERADII_NO_EXT is set), the install falls back
to the pure-Python kernel selected automatically at import time.
"""

import os

from setuptools import setup

ext_modules = []
if not os.environ.get("GAUGERADII_NO_EXT"):
    try:
        from Cython.Build import cythonize

        ext_modules = cythonize(
            ["src/gaugeradii/_kernel.pyx"],
            compiler_directives={"language_level": "3"},
        )
    except ImportError:
        pass

setup(ext_modules=ext_modules)
