from setuptools import Extension, setup

try:
    from Cython.Build import cythonize
    ext_modules = cythonize(
        [Extension("cluspat._speedups", ["src/cluspat/_speedups.pyx"])],
        language_level=3,
    )
except ImportError:
    # the package runs on the pure-Python kernels without the extension
    ext_modules = []

setup(ext_modules=ext_modules)
