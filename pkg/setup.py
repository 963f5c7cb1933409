import os

from setuptools import Extension, setup

# The compiled kernel is an optional accelerator: gbott falls back to the
# pure-Python kernel at import time when the extension is unavailable.
# Set GBOTT_NO_EXTENSION=1 to skip building it.
ext_modules = []
if os.environ.get("GBOTT_NO_EXTENSION") != "1":
    try:
        from Cython.Build import cythonize

        ext_modules = cythonize(
            [Extension("gbott._kernel_c", ["src/gbott/_kernel_c.pyx"])],
            compiler_directives={"language_level": "3"},
        )
    except ImportError:
        ext_modules = []

setup(ext_modules=ext_modules)
