"""Build script: compiles the optional Cython search kernel.

The package is fully functional without the extension; critlab._kernel
falls back to the pure-Python kernel when the compiled module is absent,
so build failures here only cost speed.
"""

import os

from setuptools import setup
from setuptools.command.build_ext import build_ext
from setuptools.extension import Extension

PYX = os.path.join("src", "critlab", "_kernel", "_cykernel.pyx")

ext_modules = []
if os.path.exists(PYX):
    try:
        from Cython.Build import cythonize

        ext_modules = cythonize(
            [
                Extension(
                    "critlab._kernel._cykernel",
                    [PYX],
                    extra_compile_args=["-O3"],
                )
            ],
            language_level=3,
        )
    except ImportError:
        pass


class optional_build_ext(build_ext):
    """Degrade to the pure-Python kernel when compilation is impossible."""

    def run(self):
        try:
            super().run()
        except Exception as exc:  # no compiler, broken toolchain, ...
            print(f"WARNING: skipping compiled kernel ({exc}); using pure Python")

    def build_extension(self, ext):
        try:
            super().build_extension(ext)
        except Exception as exc:
            print(f"WARNING: failed to build {ext.name} ({exc}); using pure Python")


setup(ext_modules=ext_modules, cmdclass={"build_ext": optional_build_ext})
