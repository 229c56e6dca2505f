"""Selects the lattice-enumeration kernel at import time.

The compiled extension is preferred when it built; otherwise (or when
HIRZCOH_PURE=1 is set) the pure-Python enumeration takes over with
identical semantics.  ``BACKEND`` records which one is active.
"""

import os

if os.environ.get("HIRZCOH_PURE") == "1":
    from ._kernels_py import lattice_point_count

    BACKEND = "python"
else:
    try:
        from ._kernels import lattice_point_count

        BACKEND = "cython"
    except ImportError:
        from ._kernels_py import lattice_point_count

        BACKEND = "python"

__all__ = ["lattice_point_count", "BACKEND"]
