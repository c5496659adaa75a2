"""Build script: compiles the hot-kernel extension when a toolchain exists.

If Cython or a C compiler is missing the install still succeeds; the
package falls back to the numpy kernels at import time.
"""

from setuptools import setup

try:
    import numpy
    from Cython.Build import cythonize
    from setuptools.extension import Extension

    # -O3/-march=native enable SIMD sqrt and compares; -ffp-contract=off
    # disables FMA contraction so results stay bit-identical to the
    # numpy fallback (no -ffast-math for the same reason).
    ext_modules = cythonize(
        [
            Extension(
                "peakmerge._ckernels",
                ["src/peakmerge/_ckernels.pyx"],
                extra_compile_args=["-O3", "-march=native", "-ffp-contract=off"],
            )
        ],
        compiler_directives={"language_level": "3"},
    )
    include_dirs = [numpy.get_include()]
except ImportError:
    ext_modules = []
    include_dirs = []

setup(ext_modules=ext_modules, include_dirs=include_dirs)
