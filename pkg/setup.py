"""Build script: compiles the optional sweep kernel extension.

The package is fully functional without the extension (a pure-Python
twin is selected at import time), so compilation failures are demoted
to a warning rather than failing the install.
"""

import sys

from setuptools import setup

ext_modules = []
try:
    from Cython.Build import cythonize

    ext_modules = cythonize(
        ["src/rectiskel/_sweep_core.pyx"],
        compiler_directives={
            "language_level": 3,
            "boundscheck": False,
            "wraparound": False,
            "cdivision": True,
            "embedsignature": True,
        },
    )
except Exception as exc:  # pragma: no cover - environment dependent
    sys.stderr.write(f"warning: building without compiled kernel ({exc})\n")

setup(ext_modules=ext_modules)
