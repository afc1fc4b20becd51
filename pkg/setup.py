"""Build shim: compiles the bitset kernel extension.

The package works without the extension (a pure-Python backend is selected at
import time), but the compiled kernels are what make corpus scans quick.
"""
from setuptools import Extension, setup
from Cython.Build import cythonize

extensions = [
    Extension("gtough._kernels._fast", ["src/gtough/_kernels/_fast.pyx"]),
]

setup(
    ext_modules=cythonize(
        extensions,
        compiler_directives={
            "language_level": "3",
            "boundscheck": False,
            "wraparound": False,
            "cdivision": True,
        },
    ),
)
