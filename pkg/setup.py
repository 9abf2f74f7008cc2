import os

from setuptools import Extension, setup

ext_modules = []
if not os.environ.get("OCTOLINE_SKIP_EXT"):
    try:
        from Cython.Build import cythonize

        ext_modules = cythonize(
            [Extension("octoline._kernels", ["src/octoline/_kernels.pyx"])],
            language_level=3,
        )
    except ImportError:
        # No Cython available: install the pure Python package only.
        ext_modules = []

setup(ext_modules=ext_modules)
