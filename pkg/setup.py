from setuptools import Extension, setup
from Cython.Build import cythonize

setup(
    ext_modules=cythonize(
        [
            Extension(
                "scfc._ckernels",
                sources=["src/scfc/_ckernels.pyx"],
                extra_compile_args=["-O3"],
                language="c++",
            )
        ],
        language_level=3,
    ),
)
