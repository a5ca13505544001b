import os

from setuptools import Extension, setup

# The compiled kernels are optional: without Cython, or with
# LEVELSCOPE_NO_EXT=1, the package installs with its pure-Python fallback.
ext_modules = []
if os.environ.get("LEVELSCOPE_NO_EXT") != "1":
    try:
        from Cython.Build import cythonize
    except ImportError:
        cythonize = None
    if cythonize is not None:
        ext_modules = cythonize(
            [
                Extension(
                    "levelscope._kernels",
                    ["src/levelscope/_kernels.pyx"],
                    language="c++",
                    extra_compile_args=["-O3"],
                )
            ],
            compiler_directives={"language_level": "3"},
        )

setup(ext_modules=ext_modules)
