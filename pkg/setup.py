import sys

from setuptools import Extension, setup

try:
    from Cython.Build import cythonize
except ImportError:
    cythonize = None

# Forbid floating point contraction so the compiled kernels stay
# bit-identical with the pure Python fallback on FMA-capable targets.
extra_compile_args = [] if sys.platform == "win32" else ["-ffp-contract=off"]

extensions = [
    Extension(
        "fracsqueeze._kernels._core",
        ["src/fracsqueeze/_kernels/_core.pyx"],
        extra_compile_args=extra_compile_args,
    )
]

if cythonize is not None:
    ext_modules = cythonize(
        extensions,
        compiler_directives={
            "language_level": 3,
            "boundscheck": False,
            "wraparound": False,
            "cdivision": True,
        },
    )
else:
    # Source distribution without Cython available: the package still works
    # because the pure Python kernels are selected at import time.
    ext_modules = []

setup(ext_modules=ext_modules)
