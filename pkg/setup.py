import os

from setuptools import setup

# The compiled kernel is an optional speedup; the package falls back to the
# pure-Python kernel at import time when the extension is absent.
ext_modules = []
if os.environ.get("TETRAGAUSS_NO_EXT") != "1":
    try:
        from Cython.Build import cythonize

        ext_modules = cythonize(
            ["src/tetragauss/_kernel.pyx"],
            compiler_directives={"language_level": "3"},
        )
    except ImportError:
        pass

setup(ext_modules=ext_modules)
