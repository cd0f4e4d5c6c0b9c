from setuptools import Extension, setup

try:
    from Cython.Build import cythonize
except ImportError:
    # Pure-python install still works; the package falls back to the
    # numpy backend at import time.
    ext_modules = []
else:
    ext_modules = cythonize(
        [
            Extension(
                "robinrect._fastcore",
                ["src/robinrect/_fastcore.pyx"],
                extra_compile_args=["-O3"],
            )
        ],
        compiler_directives={"language_level": "3"},
    )

setup(ext_modules=ext_modules)
