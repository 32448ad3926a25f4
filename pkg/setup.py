from setuptools import Extension, setup

try:
    from Cython.Build import cythonize

    extensions = cythonize(
        [
            Extension(
                "seqsketch._kernels",
                ["src/seqsketch/_kernels.pyx"],
                extra_compile_args=["-O3"],
            )
        ],
        language_level=3,
    )
except ImportError:
    # No Cython: install pure-Python only; the numpy backend takes over at import.
    extensions = []

setup(ext_modules=extensions)
