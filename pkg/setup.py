import os

from setuptools import setup

ext_modules = []
if os.environ.get("BIGRES_NO_EXT") != "1":
    try:
        from Cython.Build import cythonize
        from setuptools import Extension

        ext_modules = cythonize(
            [
                Extension(
                    "bigres._kernel._cykernel",
                    ["src/bigres/_kernel/_cykernel.pyx"],
                )
            ],
            language_level=3,
        )
    except ImportError:
        # No Cython available: the pure-Python kernel is used instead.
        ext_modules = []

setup(ext_modules=ext_modules)
