import os

from setuptools import setup

ext_modules = []
if os.environ.get("REPZETA_NO_EXTENSION", "") in ("", "0"):
    try:
        from Cython.Build import cythonize
        from setuptools import Extension

        ext_modules = cythonize(
            [Extension("repzeta._kernels", ["src/repzeta/_kernels.pyx"], extra_compile_args=["-O3"])],
            compiler_directives={"language_level": "3"},
        )
    except ImportError:
        ext_modules = []

setup(ext_modules=ext_modules)
