from setuptools import Extension, setup

try:
    from Cython.Build import cythonize
except ImportError:
    # the package falls back to the numpy kernels at import time
    cythonize = None

extensions = [
    Extension(
        "jcspec._kernels",
        ["src/jcspec/_kernels.pyx"],
        extra_compile_args=["-O3"],
    )
]

setup(
    ext_modules=cythonize(extensions, language_level=3) if cythonize else [],
)
