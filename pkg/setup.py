from setuptools import Extension, setup

# The compiled kernel is optional: quolat.kernel falls back to the pure-Python
# implementation when the extension is unavailable.
try:
    from Cython.Build import cythonize

    ext_modules = cythonize(
        [
            Extension(
                "quolat._fast",
                ["src/quolat/_fast.pyx"],
                extra_compile_args=["-O2"],
            )
        ],
        compiler_directives={"language_level": "3"},
    )
except ImportError:
    ext_modules = []

setup(ext_modules=ext_modules)
