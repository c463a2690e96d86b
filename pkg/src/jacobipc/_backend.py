"""Kernel backend selection.

The compiled extension is preferred; the pure-Python module is a drop-in
fallback.  Set JACOBIPC_PURE=1 to force the fallback (used by the parity
tests and the backend benchmark).
"""

import os

if os.environ.get("JACOBIPC_PURE") == "1":
    from jacobipc import _kernels_py as kernels
else:
    try:
        from jacobipc import _kernels as kernels
    except ImportError:
        from jacobipc import _kernels_py as kernels

USING_COMPILED = kernels.COMPILED
