from setuptools import Extension, setup
from Cython.Build import cythonize

setup(
    ext_modules=cythonize(
        [Extension("vncore._kernels", ["src/vncore/_kernels.pyx"])],
        compiler_directives={"language_level": "3"},
    )
)
