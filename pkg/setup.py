import os

from setuptools import Extension, setup

ext_modules = []
if not os.environ.get("DTSLDPC_NO_EXT"):
    try:
        import numpy
        from Cython.Build import cythonize
    except ImportError:  # build the pure-Python package only
        pass
    else:
        ext_modules = cythonize(
            [
                Extension(
                    "dtsldpc._kernels",
                    ["src/dtsldpc/_kernels.pyx"],
                    include_dirs=[numpy.get_include()],
                    extra_compile_args=["-O3"],
                )
            ],
            language_level=3,
        )

setup(ext_modules=ext_modules)
