from setuptools import Extension, setup

try:
    from Cython.Build import cythonize
except ImportError:
    # pure-Python kernels are selected at import time
    ext_modules = []
else:
    ext_modules = cythonize(
        [Extension("gammalab._kernels", ["src/gammalab/_kernels.pyx"],
                   extra_compile_args=["-O3"])],
        compiler_directives={"language_level": "3"},
    )

setup(ext_modules=ext_modules)
