from setuptools import Extension, setup

try:
    from Cython.Build import cythonize
except ImportError:
    # The package still works without the compiled core: farey_lt._kernels
    # falls back to the numpy implementations at import time.
    ext_modules = []
else:
    ext_modules = cythonize(
        [
            Extension(
                "farey_lt._kernels.native",
                ["src/farey_lt/_kernels/native.pyx"],
                extra_compile_args=["-O3"],
            )
        ],
        compiler_directives={"language_level": "3"},
    )

setup(ext_modules=ext_modules)
