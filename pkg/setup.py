"""Build script: compiles the fraction-free elimination kernel if Cython is
available. The package works without it (pure-Python lane is selected at
import when the extension is missing)."""

from setuptools import setup

try:
    from Cython.Build import cythonize

    ext_modules = cythonize(
        "src/buckysob/_bareiss_cy.pyx",
        language_level=3,
    )
except ImportError:
    ext_modules = []

setup(ext_modules=ext_modules)
