"""Build script: compiles the optional C search kernel when a toolchain exists.

The package is fully functional without the extension; covercalc._kernels
falls back to the pure-Python implementation at import time.
"""

import sys

from setuptools import Extension, setup
from setuptools.command.build_ext import build_ext


class OptionalBuildExt(build_ext):
    """Build the extension if possible, otherwise install pure-Python only."""

    def run(self):
        try:
            super().run()
        except Exception as exc:  # no compiler, broken toolchain, ...
            print(f"warning: C kernel not built ({exc}); using pure-Python kernels",
                  file=sys.stderr)

    def build_extension(self, ext):
        try:
            super().build_extension(ext)
        except Exception as exc:
            print(f"warning: C kernel not built ({exc}); using pure-Python kernels",
                  file=sys.stderr)


def extensions():
    try:
        from Cython.Build import cythonize
    except ImportError:
        return []
    ext = Extension("covercalc._kernels._fast",
                    ["src/covercalc/_kernels/_fast.pyx"])
    return cythonize([ext], language_level="3")


setup(ext_modules=extensions(), cmdclass={"build_ext": OptionalBuildExt})
