"""Kernel backend selector.

Prefers the compiled extension, falls back to the pure-Python twin when the
extension was not built. Override with LAYSUM_KERNELS=python|cython|auto
(cython raises if the extension is missing, for benchmarking honesty).
"""

from __future__ import annotations

import os

_requested = os.environ.get("LAYSUM_KERNELS", "auto").lower()

if _requested == "python":
    from . import _kernels_py as _impl

    BACKEND = "python"
elif _requested == "cython":
    from . import _kernels as _impl  # type: ignore[attr-defined]

    BACKEND = "cython"
else:
    try:
        from . import _kernels as _impl  # type: ignore[attr-defined]

        BACKEND = "cython"
    except ImportError:
        from . import _kernels_py as _impl

        BACKEND = "python"

lcs_length = _impl.lcs_length
bm25_accumulate = _impl.bm25_accumulate
