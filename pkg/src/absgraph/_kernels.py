"""Backend selection for the eigensolver kernel.

The compiled extension is preferred; set ``ABSGRAPH_PURE=1`` to force the
pure-Python fallback.
"""

import os

from . import _jacobi_py

BACKENDS = {"python": _jacobi_py.jacobi_sweeps}

try:
    from . import _jacobi_ext
except ImportError:  # extension not built
    _jacobi_ext = None
else:
    BACKENDS["cython"] = _jacobi_ext.jacobi_sweeps

if os.environ.get("ABSGRAPH_PURE", "") not in ("", "0") or _jacobi_ext is None:
    BACKEND = "python"
else:
    BACKEND = "cython"

jacobi_sweeps = BACKENDS[BACKEND]
