"""Kernel backend selection.

The compiled extension (``ssgenus4._speedups``) is preferred when importable;
otherwise the pure-Python twin (``ssgenus4._pure``) takes over.  Set
``SSGENUS4_BACKEND=python`` to force the fallback, ``SSGENUS4_BACKEND=compiled``
to fail loudly if the extension is missing.  Both expose the same API and are
bit-identical; only throughput differs.
"""

import os

from . import _pure

_forced = os.environ.get("SSGENUS4_BACKEND", "").strip().lower()

if _forced in ("python", "pure"):
    active = _pure
elif _forced in ("compiled", "cython", "c"):
    from . import _speedups as active
else:
    try:
        from . import _speedups as active  # type: ignore[no-redef]
    except ImportError:
        active = _pure

BACKEND: str = active.BACKEND
