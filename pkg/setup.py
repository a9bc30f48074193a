from setuptools import Extension, setup

try:
    from Cython.Build import cythonize
except ImportError:  # fall back to the pure Python walk
    ext_modules = []
else:
    ext_modules = cythonize(
        [
            Extension(
                "onepart._kernel._walk",
                ["src/onepart/_kernel/_walk.pyx"],
                extra_compile_args=["-O3"],
                optional=True,
            )
        ],
        compiler_directives={"language_level": "3"},
    )

setup(ext_modules=ext_modules)
