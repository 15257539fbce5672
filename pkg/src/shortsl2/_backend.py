"""Select the kernel implementation once, at import.

Set ``SHORTSL2_PURE_PYTHON=1`` to force the Python loops even when the
compiled extension is available.
"""
import os

from . import _pykernels

BACKEND = "python"
rref_int = _pykernels.rref_int
jacobi_residuals = _pykernels.jacobi_residuals

if os.environ.get("SHORTSL2_PURE_PYTHON", "") not in ("1", "true", "yes"):
    try:
        from . import _ckernels
    except ImportError:
        _ckernels = None
    if _ckernels is not None:
        BACKEND = "cython"
        rref_int = _ckernels.rref_int
        jacobi_residuals = _ckernels.jacobi_residuals
