"""Select the enumeration kernel at import time.

The compiled extension is used when it was built; set ``RAMM_PURE_PYTHON=1``
to force the pure-Python fallback.
"""

from __future__ import annotations

import os
from array import array

from . import _pykernel

BACKEND = "python"
_cbest = None
if os.environ.get("RAMM_PURE_PYTHON", "") in ("", "0"):
    try:
        from ._ckernel import best_mapping as _cbest
        BACKEND = "cython"
    except ImportError:
        _cbest = None

# loads are accumulated in int64 by the compiled kernel
_INT64_SAFE = 2**62


def best_mapping(scaled: list[list[int]], *, backend: str | None = None):
    """Return ``(makespan, witness, explored)`` for an integer ETC matrix."""
    n, m = len(scaled), len(scaled[0])
    flat = [v for row in scaled for v in row]
    use = backend or BACKEND
    if use == "cython" and _cbest is None:
        raise RuntimeError("compiled kernel is not available")
    if use == "cython" and sum(max(row) for row in scaled) < _INT64_SAFE:
        return _cbest(array("q", flat), n, m)
    return _pykernel.best_mapping(flat, n, m)
