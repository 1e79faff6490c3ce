import os

from setuptools import Extension, setup

ext_modules = []
_pyx = os.path.join("src", "ssgenus4", "_speedups.pyx")
if os.path.exists(_pyx):
    try:
        from Cython.Build import cythonize
    except ImportError:
        pass
    else:
        ext_modules = cythonize(
            [Extension("ssgenus4._speedups", [_pyx], optional=True)],
            language_level=3,
        )

setup(ext_modules=ext_modules)
