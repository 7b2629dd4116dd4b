from setuptools import Extension, setup

# The compiled DP kernel is optional: partlab.counting falls back to the
# pure-Python kernel when the extension is absent.
try:
    from Cython.Build import cythonize

    extensions = cythonize(
        [Extension("partlab._dpcore", ["src/partlab/_dpcore.pyx"])],
        compiler_directives={"language_level": "3"},
    )
except ImportError:
    extensions = []

setup(ext_modules=extensions)
