from setuptools import Extension, setup

try:
    from Cython.Build import cythonize

    ext_modules = cythonize(
        [Extension("listcolor._ckernel", ["src/listcolor/_ckernel.pyx"])],
        language_level=3,
    )
except ImportError:
    # Pure-Python install: listcolor.kernel falls back to _pykernel at import.
    ext_modules = []

setup(ext_modules=ext_modules)
