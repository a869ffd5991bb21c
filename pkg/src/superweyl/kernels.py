"""Permutation kernels, compiled when available.

The Cython build of ``_ckernels`` is used if it imports; otherwise the
pure-Python module with the same functions.  Setting ``SUPERWEYL_PURE=1``
forces the fallback.
"""

from __future__ import annotations

import os

if os.environ.get("SUPERWEYL_PURE", "") not in ("", "0"):
    from . import _pykernels as _impl
else:
    try:
        from . import _ckernels as _impl  # type: ignore[attr-defined]
    except ImportError:
        from . import _pykernels as _impl

BACKEND = "compiled" if _impl.__name__.endswith("_ckernels") else "python"

compose = _impl.compose
invert = _impl.invert
is_identity = _impl.is_identity
cycle_lengths = _impl.cycle_lengths
element_order = _impl.element_order
power = _impl.power
orbit_transversal = _impl.orbit_transversal
sift = _impl.sift
closure_size = _impl.closure_size

__all__ = [
    "BACKEND",
    "compose",
    "invert",
    "is_identity",
    "cycle_lengths",
    "element_order",
    "power",
    "orbit_transversal",
    "sift",
    "closure_size",
]
