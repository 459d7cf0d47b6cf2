"""Build script: compiles the optional tree-enumeration kernel.

The package is pure Python except for ``treeinv._treecore``, a Cython
extension accelerating the labeled-tree enumeration inner loop.  The
extension is optional: if Cython or a C compiler is unavailable the
install proceeds and the package falls back to the pure-Python kernel
(``treeinv._treecore_py``) at import time.
"""

from setuptools import Extension, setup

ext_modules = []
try:
    from Cython.Build import cythonize

    ext_modules = cythonize(
        [
            Extension(
                "treeinv._treecore",
                ["src/treeinv/_treecore.pyx"],
                optional=True,
            )
        ],
        language_level=3,
    )
except ImportError:
    pass

setup(ext_modules=ext_modules)
