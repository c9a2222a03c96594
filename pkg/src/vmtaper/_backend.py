"""Kernel selection: the compiled extension when importable, else numpy.

Set ``VMTAPER_PURE_PYTHON=1`` to force the fallback.
"""

import os

if os.environ.get("VMTAPER_PURE_PYTHON"):
    from vmtaper import _fallback as kernels
else:
    try:
        from vmtaper import _kernels as kernels
    except ImportError:
        from vmtaper import _fallback as kernels

COMPILED = kernels.__name__.endswith("_kernels")
NAME = "cython" if COMPILED else "python"
