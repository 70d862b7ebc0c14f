"""Build script: compiles the Cython kernel extension when a toolchain is present.

The extension is optional. If Cython or a C compiler is unavailable the
install still succeeds and `laysum.kernels` falls back to the pure-Python
twin at import time.
"""

import warnings

from setuptools import setup
from setuptools.command.build_ext import build_ext


class OptionalBuildExt(build_ext):
    """Skip extension compilation instead of failing the whole install."""

    def run(self):
        try:
            super().run()
        except Exception as exc:  # pragma: no cover - toolchain-dependent
            warnings.warn(f"skipping C extension build: {exc}")

    def build_extension(self, ext):
        try:
            super().build_extension(ext)
        except Exception as exc:  # pragma: no cover - toolchain-dependent
            warnings.warn(f"skipping {ext.name}: {exc}")


ext_modules = []
try:
    from Cython.Build import cythonize

    ext_modules = cythonize(
        ["src/laysum/_kernels.pyx"],
        compiler_directives={"language_level": "3"},
    )
except ImportError:  # pragma: no cover - toolchain-dependent
    warnings.warn("Cython not available; building pure-Python laysum")

setup(ext_modules=ext_modules, cmdclass={"build_ext": OptionalBuildExt})
