import os

from setuptools import Extension, setup
from setuptools.command.build_ext import build_ext

try:
    from Cython.Build import cythonize
except ImportError:
    cythonize = None


class OptionalBuildExt(build_ext):
    """Build the compiled kernels if possible, fall back to pure Python otherwise."""

    def run(self):
        try:
            super().run()
        except Exception as exc:  # missing compiler, etc.
            print(f"warning: skipping compiled kernels ({exc}); "
                  "the pure-Python fallback will be used")

    def build_extension(self, ext):
        try:
            super().build_extension(ext)
        except Exception as exc:
            print(f"warning: could not build {ext.name} ({exc}); "
                  "the pure-Python fallback will be used")


extensions = []
if cythonize is not None and not os.environ.get("PILESHUFFLE_SKIP_EXT"):
    extensions = cythonize(
        [Extension("pileshuffle._kernels_c", ["src/pileshuffle/_kernels_c.pyx"])],
        language_level="3",
    )

setup(ext_modules=extensions, cmdclass={"build_ext": OptionalBuildExt})
