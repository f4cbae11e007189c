"""Build script: compiles the optional C kernel, falling back to pure Python.

The package works without the extension (the pure backend is selected at
import time); the extension only accelerates the hot kernels.
"""

from setuptools import Extension, setup
from setuptools.command.build_ext import build_ext


class OptionalBuildExt(build_ext):
    # A toolchain failure must not fail the install: the pure backend works.
    def run(self):
        try:
            super().run()
        except Exception as exc:  # pragma: no cover - toolchain dependent
            print(f"warning: C kernel build skipped ({exc}); pure Python backend will be used")

    def build_extension(self, ext):
        try:
            super().build_extension(ext)
        except Exception as exc:  # pragma: no cover - toolchain dependent
            print(f"warning: building {ext.name} failed ({exc}); pure Python backend will be used")


def extensions():
    try:
        from Cython.Build import cythonize
    except ImportError:  # pragma: no cover - build environment dependent
        return []
    return cythonize(
        [Extension("redld._kernels._ckern", ["src/redld/_kernels/_ckern.pyx"])],
        language_level="3",
    )


setup(ext_modules=extensions(), cmdclass={"build_ext": OptionalBuildExt})
