import os

import numpy as np
from setuptools import Extension, setup

try:
    from Cython.Build import cythonize
except ImportError:  # pure-Python install, kernels fall back at import time
    cythonize = None

extensions = []
if cythonize is not None and not os.environ.get("VMTAPER_NO_EXT"):
    extensions = cythonize(
        [
            Extension(
                "vmtaper._kernels",
                ["src/vmtaper/_kernels.pyx"],
                include_dirs=[np.get_include()],
                extra_compile_args=["-O3"],
                optional=True,
            )
        ],
        compiler_directives={"language_level": "3"},
    )

setup(ext_modules=extensions)
