"""Hot kernels: exact sparse polynomial products, Grassmann signs, row reduction.

The compiled module is used when it was built and imports cleanly; set
``ANTIBRACKET_PURE_PYTHON=1`` to force the pure-Python fallback.
"""

import os

from . import _pykernels as python_kernels

compiled_kernels = None
if not os.environ.get("ANTIBRACKET_PURE_PYTHON"):
    try:
        from . import _ckernels as compiled_kernels
    except ImportError:  # extension not built
        compiled_kernels = None

_impl = compiled_kernels if compiled_kernels is not None else python_kernels
BACKEND = "compiled" if compiled_kernels is not None else "python"

grassmann_sign = _impl.grassmann_sign
poly_mul = _impl.poly_mul
poly_add = _impl.poly_add
superpoly_mul = _impl.superpoly_mul
upoly_mul = _impl.upoly_mul
reduce_row = _impl.reduce_row
insert_row = _impl.insert_row

__all__ = [
    "BACKEND",
    "compiled_kernels",
    "python_kernels",
    "grassmann_sign",
    "poly_mul",
    "poly_add",
    "superpoly_mul",
    "upoly_mul",
    "reduce_row",
    "insert_row",
]
