"""Build shim for the compiled generation kernel.

All metadata lives in pyproject.toml; this file only wires up the Cython
extension.  `pip install -e . --no-build-isolation` compiles it in place.
If the extension is absent at runtime the package falls back to the pure
Python generator, so a failed build degrades performance, not behavior.
"""

from setuptools import Extension, setup
from Cython.Build import cythonize

extensions = [
    Extension(
        "hiccup._kernel",
        ["src/hiccup/_kernel.pyx"],
        extra_compile_args=["-O3"],
    ),
]

setup(
    ext_modules=cythonize(extensions, compiler_directives={"language_level": "3"}),
)
