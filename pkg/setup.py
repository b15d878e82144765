"""Build hook for the optional compiled LR kernel.

Without Cython (or a C compiler) the package installs pure-Python and
selects the fallback kernel at import time.
"""
from setuptools import setup

ext_modules = []
try:
    from Cython.Build import cythonize
    from setuptools import Extension

    ext_modules = cythonize(
        [Extension("cayleycoh.schur._lr", ["src/cayleycoh/schur/_lr.pyx"])],
        language_level="3",
    )
except ImportError:
    pass

setup(ext_modules=ext_modules)
