from setuptools import Extension, setup

try:
    from Cython.Build import cythonize
except ImportError:
    # No Cython: install without the compiled kernels, the numpy
    # fallback backend is selected at import time.
    ext_modules = []
else:
    ext_modules = cythonize(
        [
            Extension(
                "hyperforman.kernels._ckernels",
                ["src/hyperforman/kernels/_ckernels.pyx"],
                extra_compile_args=["-O3"],
            )
        ],
        language_level=3,
    )

setup(ext_modules=ext_modules)
