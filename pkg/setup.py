"""Build script: compiles the optional lattice-enumeration kernel.

The package is pure Python except for one hot loop (the lattice-point
oracle in hirzcoh.cohomology).  If Cython or a C compiler is missing the
build silently skips the extension and the package falls back to the
pure-Python kernel at import time.
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
                "hirzcoh._kernels",
                ["src/hirzcoh/_kernels.pyx"],
                optional=True,
            )
        ],
        language_level="3",
    )

setup(ext_modules=ext_modules)
