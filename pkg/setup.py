"""Build script for the compiled band-matrix kernels.

The extension is optional: if it cannot be built the package still installs
and falls back to the pure-Python kernels in chebwell._kernels._band_py.
Floating-point contraction is disabled so the compiled kernels stay
bit-identical to the pure-Python twins.
"""

from setuptools import Extension, setup

try:
    from Cython.Build import cythonize
except ImportError:
    ext_modules = []
else:
    ext_modules = cythonize(
        [
            Extension(
                "chebwell._kernels._band",
                ["src/chebwell/_kernels/_band.pyx"],
                extra_compile_args=["-O3", "-ffp-contract=off"],
                optional=True,
            )
        ],
        language_level=3,
    )

setup(ext_modules=ext_modules)
