"""Search-kernel selection: compiled extension when available, else pure Python.

Set CRITLAB_PURE=1 to force the pure-Python kernel.  Both kernels implement
the identical search (same branch order, node counts and answers); the
compiled one only goes faster.  `solve` always dispatches per call so large
palettes (k > 62) fall back to arbitrary-precision Python masks.
"""

from __future__ import annotations

import os

from . import pykernel

YES, NO, BUDGET = pykernel.YES, pykernel.NO, pykernel.BUDGET

_cy = None
if os.environ.get("CRITLAB_PURE", "") != "1":
    try:
        from . import _cykernel as _cy  # type: ignore[attr-defined]
    except ImportError:
        _cy = None

KERNEL = "cython" if _cy is not None else "python"


def solve(n, pairs, k, node_limit=0, wall_limit=0.0):
    if _cy is not None and k <= 62:
        return _cy.solve(n, pairs, k, node_limit, wall_limit)
    return pykernel.solve(n, pairs, k, node_limit, wall_limit)
