"""Build hook for the optional compiled kernels.

The package is pure Python plus one optional Cython extension holding the
enumeration inner loops.  When Cython (or a C compiler) is unavailable the
extension is skipped and moakit falls back to the numpy kernels at import
time, so `pip install .` must never fail on account of the extension.
Install with `pip install -e . --no-build-isolation` so the build sees the
environment's numpy and Cython.
"""

from setuptools import Extension, setup

ext_modules = []
try:
    import numpy
    from Cython.Build import cythonize

    ext_modules = cythonize(
        [
            Extension(
                "moakit._ckernels",
                ["src/moakit/_ckernels.pyx"],
                include_dirs=[numpy.get_include()],
                extra_compile_args=["-O3"],
            )
        ],
        compiler_directives={"language_level": "3"},
    )
except ImportError:
    pass

setup(ext_modules=ext_modules)
