"""Build script.

The package is pure Python except for one optional Cython extension,
``mwlattice._boxenum``, which accelerates the brute-force short-vector
enumeration used as a cross-check oracle.  If Cython or a C compiler is
unavailable the build falls back to the pure implementations silently;
every feature remains available, only slower.
"""

import sys

from setuptools import setup

ext_modules = []
try:
    from Cython.Build import cythonize
    from setuptools import Extension

    ext_modules = cythonize(
        [Extension("mwlattice._boxenum", ["src/mwlattice/_boxenum.pyx"])],
        language_level="3",
    )
except Exception as exc:  # pragma: no cover - depends on build host
    sys.stderr.write("mwlattice: skipping compiled kernel (%s)\n" % exc)
    ext_modules = []


try:
    from setuptools.command.build_ext import build_ext as _build_ext

    class optional_build_ext(_build_ext):  # noqa: N801 - distutils naming
        def run(self):
            try:
                _build_ext.run(self)
            except Exception as exc:  # pragma: no cover
                sys.stderr.write(
                    "mwlattice: compiled kernel build failed (%s); "
                    "using pure Python fallback\n" % exc
                )

        def build_extension(self, ext):
            try:
                _build_ext.build_extension(self, ext)
            except Exception as exc:  # pragma: no cover
                sys.stderr.write(
                    "mwlattice: could not compile %s (%s); "
                    "using pure Python fallback\n" % (ext.name, exc)
                )

    cmdclass = {"build_ext": optional_build_ext}
except Exception:  # pragma: no cover
    cmdclass = {}

setup(ext_modules=ext_modules, cmdclass=cmdclass)
