"""Build script.

The arithmetic kernels have an optional compiled flavour
(``hyperhodge._ckernels``).  When Cython and a C compiler are available the
extension is built; otherwise the install silently falls back to the pure
Python kernels, which are functionally identical.

Build the extension in a source checkout with::

    python setup.py build_ext --inplace
"""

import os

from setuptools import setup
from setuptools.command.build_ext import build_ext


def _extensions():
    if os.environ.get("HYPERHODGE_PURE") == "1":
        return []
    try:
        from Cython.Build import cythonize
        from setuptools import Extension
    except ImportError:
        return []
    return cythonize(
        [Extension("hyperhodge._ckernels", ["src/hyperhodge/_ckernels.pyx"])],
        language_level="3",
    )


class optional_build_ext(build_ext):
    """Degrade to the pure-Python kernels when compilation fails."""

    def run(self):
        try:
            build_ext.run(self)
        except Exception as exc:  # missing compiler, broken toolchain
            print(f"warning: skipping compiled kernels ({exc}); "
                  "using the pure-Python fallback")

    def build_extension(self, ext):
        try:
            build_ext.build_extension(self, ext)
        except Exception as exc:
            print(f"warning: could not build {ext.name} ({exc}); "
                  "using the pure-Python fallback")


setup(ext_modules=_extensions(), cmdclass={"build_ext": optional_build_ext})
