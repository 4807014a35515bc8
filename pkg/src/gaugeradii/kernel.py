"""Kernel selection: compiled pivot loops when available, pure Python otherwise.

The compiled extension is an optional build artifact; importing this module
never fails because of it.  Set ``GAUGERADII_PURE=1`` to force the pure-Python
kernels (useful for debugging and for the backend benchmark).  ``lp.py`` looks
the functions up through this module at call time, so a benchmark may also
rebind them temporarily.
"""

import os

if os.environ.get("GAUGERADII_PURE"):
    from . import _kernel_py as _impl
else:
    try:
        from . import _kernel as _impl  # type: ignore[attr-defined]
    except ImportError:
        from . import _kernel_py as _impl

BACKEND = _impl.BACKEND
pivot = _impl.pivot
dot = _impl.dot
